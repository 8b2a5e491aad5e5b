#include "spex/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace spex {

namespace {

Graph::Mask bit(int v) { return Graph::Mask{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n < 0 ? 0 : n), 0) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("graph order must lie in [0, 64], got " + std::to_string(n));
    }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        insert_edge(e.u, e.v);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                                std::to_string(n_ - 1));
    }
}

void Graph::insert_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    if (adjacent(u, v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    ++m_;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

Graph::Mask Graph::vertex_mask() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        Mask higher = rows_[u] & ~((bit(u) << 1) - 1);
        if (u == 63) {
            higher = 0;
        }
        while (higher != 0) {
            const int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.push_back({u, v});
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.insert_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!adjacent(u, v)) {
        throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    Graph g = *this;
    g.rows_[u] &= ~bit(v);
    g.rows_[v] &= ~bit(u);
    --g.m_;
    return g;
}

Graph Graph::with_vertices(int extra) const {
    Graph g(n_ + extra);
    std::copy(rows_.begin(), rows_.end(), g.rows_.begin());
    g.m_ = m_;
    return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j]) {
                throw std::invalid_argument("repeated vertex in induced subgraph");
            }
            if (adjacent(vertices[i], vertices[j])) {
                g.insert_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("permutation length differs from graph order");
    }
    Graph g(n_);
    Mask seen = 0;
    for (int v : perm) {
        check_vertex(v);
        seen |= bit(v);
    }
    if (seen != vertex_mask()) {
        throw std::invalid_argument("relabeling is not a permutation");
    }
    for (const Edge& e : edges()) {
        g.insert_edge(perm[e.u], perm[e.v]);
    }
    return g;
}

Graph Graph::without_isolated() const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v) {
        if (rows_[v] != 0) {
            keep.push_back(v);
        }
    }
    return induced(keep);
}

// graph6: N(n) header, then the upper triangle in column order (x(0,1),
// x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each byte + 63.
std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    }
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) {
            throw Graph6Error("graph6 input truncated", pos);
        }
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) {
            throw Graph6Error("graph6 byte out of range [63, 126]", pos);
        }
        ++pos;
        return c - 63;
    };
    if (text.empty()) {
        throw Graph6Error("empty graph6 string", 0);
    }
    int n = next();
    if (n == 63) {
        if (pos < text.size() && text[pos] == '~') {
            throw Graph6Error("graph6 orders above 258047 unsupported", pos);
        }
        n = (next() << 12);
        n |= next() << 6;
        n |= next();
    }
    if (n > Graph::kMaxOrder) {
        throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds 64", 0);
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos != body) {
        throw Graph6Error("graph6 body length " + std::to_string(text.size() - pos) +
                              " but order " + std::to_string(n) + " needs " + std::to_string(body),
                          text.size() - pos < body ? text.size() : pos + body);
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    int chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (k % 6 == 0) {
                chunk = next();
            }
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) {
                edges.push_back({i, j});
            }
            ++k;
        }
    }
    if (k % 6 != 0 && (chunk & ((1 << (6 - k % 6)) - 1)) != 0) {
        throw Graph6Error("nonzero padding bits in final graph6 byte", pos - 1);
    }
    return Graph(n, edges);
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    Graph::Mask unseen = g.vertex_mask();
    while (unseen != 0) {
        const int root = std::countr_zero(unseen);
        Graph::Mask comp = bit(root);
        Graph::Mask frontier = comp;
        while (frontier != 0) {
            Graph::Mask grow = 0;
            for (Graph::Mask f = frontier; f != 0; f &= f - 1) {
                grow |= g.neighbours(std::countr_zero(f));
            }
            frontier = grow & ~comp;
            comp |= grow;
        }
        unseen &= ~comp;
        std::vector<int> vs;
        for (Graph::Mask c = comp; c != 0; c &= c - 1) {
            vs.push_back(std::countr_zero(c));
        }
        out.push_back(std::move(vs));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g) { return odd_girth(g) == kInfiniteGirth; }

bool is_triangle_free(const Graph& g) { return triangle_count(g) == 0; }

int edge_count(const Graph& g) { return g.size(); }

int odd_girth(const Graph& g) {
    const int n = g.order();
    int best = kInfiniteGirth;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            if (2 * dist[u] + 1 >= best) {
                break;
            }
            for (Graph::Mask nb = g.neighbours(u); nb != 0; nb &= nb - 1) {
                const int v = std::countr_zero(nb);
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push(v);
                } else if (dist[v] == dist[u]) {
                    best = std::min(best, 2 * dist[u] + 1);
                }
            }
        }
    }
    return best;
}

long long triangle_count(const Graph& g) {
    long long count = 0;
    for (const Edge& e : g.edges()) {
        const Graph::Mask above = e.v == 63 ? 0 : ~((bit(e.v) << 1) - 1);
        count += std::popcount(g.neighbours(e.u) & g.neighbours(e.v) & above);
    }
    return count;
}

int booksize(const Graph& g) {
    int best = 0;
    for (const Edge& e : g.edges()) {
        best = std::max(best, std::popcount(g.neighbours(e.u) & g.neighbours(e.v)));
    }
    return best;
}

namespace {

bool close_five_cycle(const Graph& g, int start, int at, int depth, Graph::Mask used) {
    if (depth == 4) {
        return g.adjacent(at, start);
    }
    // Vertices other than the start must exceed it, so each cycle is rooted once.
    const Graph::Mask above = start == 63 ? 0 : ~((bit(start) << 1) - 1);
    for (Graph::Mask nb = g.neighbours(at) & above & ~used; nb != 0; nb &= nb - 1) {
        const int v = std::countr_zero(nb);
        if (close_five_cycle(g, start, v, depth + 1, used | bit(v))) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool contains_c5(const Graph& g) {
    for (int s = 0; s < g.order(); ++s) {
        if (close_five_cycle(g, s, s, 0, bit(s))) {
            return true;
        }
    }
    return false;
}

bool is_complete_bipartite(const Graph& g) {
    const Graph core = g.without_isolated();
    if (core.order() == 0 || !is_connected(core)) {
        return false;
    }
    // Connected bipartite: sides are the two BFS parity classes.
    std::vector<int> side(static_cast<std::size_t>(core.order()), -1);
    side[0] = 0;
    std::queue<int> queue;
    queue.push(0);
    long long left = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        left += side[u] == 0 ? 1 : 0;
        for (Graph::Mask nb = core.neighbours(u); nb != 0; nb &= nb - 1) {
            const int v = std::countr_zero(nb);
            if (side[v] < 0) {
                side[v] = 1 - side[u];
                queue.push(v);
            } else if (side[v] == side[u]) {
                return false;
            }
        }
    }
    return left * (core.order() - left) == core.size();
}

}  // namespace spex
