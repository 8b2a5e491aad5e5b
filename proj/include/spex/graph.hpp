#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spex {

struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1, stored as one 64-bit
// neighbourhood mask per vertex. Values are immutable once built.
class Graph {
public:
    static constexpr int kMaxOrder = 64;
    using Mask = std::uint64_t;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    Mask neighbours(int v) const { return rows_[v]; }
    int degree(int v) const;
    Mask vertex_mask() const;

    // Edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph with_vertices(int extra) const;
    Graph induced(std::span<const int> vertices) const;
    // perm[old] = new label.
    Graph relabeled(std::span<const int> perm) const;
    Graph without_isolated() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    void insert_edge(int u, int v);

    int n_ = 0;
    int m_ = 0;
    std::vector<Mask> rows_;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

class Graph6Error : public std::invalid_argument {
public:
    Graph6Error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at byte " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
bool contains_c5(const Graph& g);
int edge_count(const Graph& g);
// Shortest odd cycle length, kInfiniteGirth iff bipartite.
int odd_girth(const Graph& g);
long long triangle_count(const Graph& g);
int booksize(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
// Complete bipartite once isolated vertices are dropped (K_{s,t}, s,t >= 1).
bool is_complete_bipartite(const Graph& g);

}  // namespace spex
