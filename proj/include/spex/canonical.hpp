#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

class SearchBudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// labeling[old] = canonical position. Isomorphic graphs map to identical
// relabeled graphs. Disconnected graphs are labeled component by component,
// components ordered by (order, canonical graph6).
std::vector<int> canonical_labeling(const Graph& g);

// graph6 of the canonically relabeled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

// Vertex orbits of the automorphism group: orbit[v] is the smallest vertex
// in v's orbit.
std::vector<int> vertex_orbits(const Graph& g);

// Induced embedding: map[p] = host vertex for pattern vertex p.
using Embedding = std::vector<int>;

// Backtracking search, pattern vertices tried in descending degree order.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& map);

}  // namespace spex
