#include "spex/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace spex {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            edges.push_back({i, j});
        }
    }
    return Graph(n, edges);
}

Graph complete_bipartite(int s, int t) {
    require(s >= 0 && t >= 0, "complete_bipartite: part sizes must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < t; ++j) {
            edges.push_back({i, s + j});
        }
    }
    return Graph(s + t, edges);
}

Graph cycle(int n) {
    require(n >= 3, "cycle: need n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return Graph(n, edges);
}

Graph path(int n) {
    require(n >= 1, "path: need n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, edges);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph subdivide_edge(const Graph& g, Edge e, int k) {
    require(k >= 1, "subdivide_edge: need k >= 1");
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
        throw std::invalid_argument("subdivide_edge: (" + std::to_string(e.u) + ", " +
                                    std::to_string(e.v) + ") is not an edge");
    }
    const int n = g.order();
    Graph out = g.without_edge(e.u, e.v).with_vertices(k);
    int prev = e.u;
    for (int i = 0; i < k; ++i) {
        out = out.with_edge(prev, n + i);
        prev = n + i;
    }
    return out.with_edge(prev, e.v);
}

Graph sk(int a, int b) {
    require(a >= 2 && b >= 2, "sk: need a, b >= 2");
    return subdivide_edge(complete_bipartite(a, b), {0, a}, 1);
}

Graph s_odd(int a, int b, int k) {
    require(a >= 2 && b >= 2 && k >= 1, "s_odd: need a, b >= 2 and k >= 1");
    return subdivide_edge(complete_bipartite(a, b), {0, a}, 2 * k - 1);
}

Graph star_plus_edge(int m) {
    require(m >= 3, "star_plus_edge: need m >= 3");
    return star(m - 1).with_edge(1, 2);
}

Graph blow_up(const Graph& g, std::span<const int> sizes) {
    require(static_cast<int>(sizes.size()) == g.order(), "blow_up: one size per vertex required");
    std::vector<int> offset(sizes.size() + 1, 0);
    for (std::size_t v = 0; v < sizes.size(); ++v) {
        require(sizes[v] >= 1, "blow_up: part sizes must be >= 1");
        offset[v + 1] = offset[v] + sizes[v];
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        for (int i = offset[e.u]; i < offset[e.u + 1]; ++i) {
            for (int j = offset[e.v]; j < offset[e.v + 1]; ++j) {
                edges.push_back({i, j});
            }
        }
    }
    return Graph(offset.back(), edges);
}

Graph book(int k) {
    require(k >= 1, "book: need k >= 1");
    std::vector<Edge> edges{{0, 1}};
    for (int i = 0; i < k; ++i) {
        edges.push_back({0, 2 + i});
        edges.push_back({1, 2 + i});
    }
    return Graph(k + 2, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out = g.with_vertices(h.order());
    for (const Edge& e : h.edges()) {
        out = out.with_edge(g.order() + e.u, g.order() + e.v);
    }
    return out;
}

Graph erdos_construction(int n, int x1) {
    const int xs = n / 2;
    require(n >= 5, "erdos_construction: need n >= 5");
    require(x1 >= 1 && x1 < xs, "erdos_construction: X1 and X2 must both be nonempty");
    // X = 0..xs-1, Y = xs..n-1 with u = xs, v = xs+1.
    const int u = xs;
    const int v = xs + 1;
    std::vector<Edge> edges{{u, v}};
    for (int x = 0; x < xs; ++x) {
        for (int y = xs + 2; y < n; ++y) {
            edges.push_back({x, y});
        }
        edges.push_back({x, x < x1 ? u : v});
    }
    return Graph(n, edges);
}

}  // namespace spex
