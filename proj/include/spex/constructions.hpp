#pragma once

#include <span>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

Graph empty_graph(int n);
Graph complete_graph(int n);
// Parts {0..s-1} and {s..s+t-1}.
Graph complete_bipartite(int s, int t);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);

// Replace edge e by a path with k internal vertices (labels n..n+k-1, in
// order from e.u to e.v).
Graph subdivide_edge(const Graph& g, Edge e, int k);

// K_{a,b} with the edge (0, a) subdivided once.
Graph sk(int a, int b);
// K_{a,b} with the edge (0, a) replaced by a path on 2k+1 vertices.
Graph s_odd(int a, int b, int k);

// Star K_{1,m-1} plus one edge between two leaves.
Graph star_plus_edge(int m);

// Vertex v becomes an independent set of sizes[v] vertices.
Graph blow_up(const Graph& g, std::span<const int> sizes);

Graph book(int k);
Graph disjoint_union(const Graph& g, const Graph& h);

// Triangle-free non-bipartite graph on n vertices with floor((n-1)^2/4)+1
// edges: X = floor(n/2), Y = ceil(n/2), u,v in Y joined, X complete to
// Y \ {u,v}, u joined to the first x1 vertices of X and v to the rest.
Graph erdos_construction(int n, int x1);

}  // namespace spex
