#include "spex/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spex {

namespace {

using Mask = Graph::Mask;
using Cells = std::vector<std::vector<int>>;

constexpr long long kNodeBudget = 5'000'000;

Mask bit(int v) { return Mask{1} << v; }

// Splits cells by neighbour counts into every cell until the partition is
// equitable. Fragments are ordered by their count vectors, never by label.
void refine(const Graph& g, Cells& cells) {
    for (;;) {
        std::vector<Mask> masks(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (int v : cells[c]) {
                masks[c] |= bit(v);
            }
        }
        bool split = false;
        for (std::size_t c = 0; c < cells.size() && !split; ++c) {
            if (cells[c].size() == 1) {
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cells[c].size());
            for (int v : cells[c]) {
                std::vector<int> sig(masks.size());
                for (std::size_t d = 0; d < masks.size(); ++d) {
                    sig[d] = std::popcount(g.neighbours(v) & masks[d]);
                }
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            if (keyed.front().first == keyed.back().first) {
                continue;
            }
            Cells fragments;
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i == 0 || keyed[i].first != keyed[i - 1].first) {
                    fragments.emplace_back();
                }
                fragments.back().push_back(keyed[i].second);
            }
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
            cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), fragments.begin(),
                         fragments.end());
            split = true;
        }
        if (!split) {
            return;
        }
    }
}

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> parent;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run(Cells cells) {
        refine(g_, cells);
        std::vector<int> prefix;
        visit(cells, prefix);
    }

    // best_order_[i] = vertex at canonical position i.
    const std::vector<int>& best_order() const { return best_order_; }

private:
    std::vector<Mask> certificate(const std::vector<int>& order) const {
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            pos[order[i]] = i;
        }
        std::vector<Mask> rows(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            for (Mask nb = g_.neighbours(order[i]); nb != 0; nb &= nb - 1) {
                rows[i] |= bit(pos[std::countr_zero(nb)]);
            }
        }
        return rows;
    }

    void leaf(const Cells& cells) {
        std::vector<int> order;
        order.reserve(cells.size());
        for (const auto& c : cells) {
            order.push_back(c.front());
        }
        std::vector<Mask> cert = certificate(order);
        if (first_order_.empty()) {
            first_order_ = order;
            first_cert_ = cert;
            best_order_ = order;
            best_cert_ = cert;
            return;
        }
        const std::vector<int>* match = nullptr;
        if (cert == first_cert_) {
            match = &first_order_;
        } else if (cert == best_cert_) {
            match = &best_order_;
        }
        if (match != nullptr) {
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) {
                gamma[(*match)[i]] = order[i];
            }
            generators_.push_back(std::move(gamma));
        } else if (cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
        }
    }

    std::vector<int> stabiliser_orbits(const std::vector<int>& prefix) const {
        UnionFind uf(n_);
        for (const auto& gamma : generators_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[v] == v; });
            if (!fixes) {
                continue;
            }
            for (int v = 0; v < n_; ++v) {
                uf.unite(v, gamma[v]);
            }
        }
        std::vector<int> orbit(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            orbit[v] = uf.find(v);
        }
        return orbit;
    }

    bool twins(int u, int v) const {
        return (g_.neighbours(u) & ~bit(v)) == (g_.neighbours(v) & ~bit(u));
    }

    void visit(const Cells& cells, std::vector<int>& prefix) {
        if (++nodes_ > kNodeBudget) {
            throw SearchBudgetExceeded("canonical_form: search budget exceeded");
        }
        auto target = std::find_if(cells.begin(), cells.end(),
                                   [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const auto t = static_cast<std::size_t>(target - cells.begin());
        const std::vector<int> members = *target;
        std::vector<int> tried;
        for (int v : members) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) {
                continue;
            }
            if (!tried.empty()) {
                const std::vector<int> orbit = stabiliser_orbits(prefix);
                if (std::any_of(tried.begin(), tried.end(),
                                [&](int u) { return orbit[u] == orbit[v]; })) {
                    continue;
                }
            }
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
            child.push_back({v});
            std::vector<int> rest;
            for (int w : members) {
                if (w != v) {
                    rest.push_back(w);
                }
            }
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
            refine(g_, child);
            prefix.push_back(v);
            visit(child, prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    long long nodes_ = 0;
    std::vector<std::vector<int>> generators_;
    std::vector<int> first_order_;
    std::vector<Mask> first_cert_;
    std::vector<int> best_order_;
    std::vector<Mask> best_cert_;
};

std::vector<int> order_to_labeling(const std::vector<int>& order) {
    std::vector<int> lab(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        lab[order[i]] = static_cast<int>(i);
    }
    return lab;
}

// Canonical order of a connected graph, optionally with one vertex
// individualised up front.
std::vector<int> connected_order(const Graph& g, int marked = -1) {
    if (g.order() == 0) {
        return {};
    }
    Cells cells;
    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v) {
        if (v != marked) {
            rest.push_back(v);
        }
    }
    if (marked >= 0) {
        cells.push_back({marked});
    }
    if (!rest.empty()) {
        cells.push_back(std::move(rest));
    }
    CanonicalSearch search(g);
    search.run(std::move(cells));
    return search.best_order();
}

struct ComponentForm {
    std::vector<int> vertices;  // host labels
    std::vector<int> order;     // canonical order, indices into vertices
    std::string key;
};

std::vector<ComponentForm> component_forms(const Graph& g) {
    std::vector<ComponentForm> forms;
    for (auto& vs : components(g)) {
        const Graph sub = g.induced(vs);
        std::vector<int> order = connected_order(sub);
        std::string key = to_graph6(sub.relabeled(order_to_labeling(order)));
        forms.push_back({std::move(vs), std::move(order), std::move(key)});
    }
    std::stable_sort(forms.begin(), forms.end(), [](const ComponentForm& a, const ComponentForm& b) {
        if (a.vertices.size() != b.vertices.size()) {
            return a.vertices.size() < b.vertices.size();
        }
        return a.key < b.key;
    });
    return forms;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    std::vector<int> lab(static_cast<std::size_t>(g.order()));
    int next = 0;
    for (const ComponentForm& f : component_forms(g)) {
        for (int local : f.order) {
            lab[f.vertices[local]] = next++;
        }
    }
    return lab;
}

std::string canonical_form(const Graph& g) { return to_graph6(g.relabeled(canonical_labeling(g))); }

bool isomorphic(const Graph& g, const Graph& h) {
    return g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h);
}

std::vector<int> vertex_orbits(const Graph& g) {
    UnionFind uf(g.order());
    const std::vector<ComponentForm> forms = component_forms(g);
    for (const ComponentForm& f : forms) {
        const Graph sub = g.induced(f.vertices);
        std::vector<std::string> keys;
        for (int v = 0; v < sub.order(); ++v) {
            std::vector<int> order = connected_order(sub, v);
            keys.push_back(to_graph6(sub.relabeled(order_to_labeling(order))));
        }
        for (int u = 0; u < sub.order(); ++u) {
            for (int v = u + 1; v < sub.order(); ++v) {
                if (keys[u] == keys[v]) {
                    uf.unite(f.vertices[u], f.vertices[v]);
                }
            }
        }
    }
    // Isomorphic components: equal canonical positions correspond.
    for (std::size_t a = 0; a + 1 < forms.size(); ++a) {
        const std::size_t b = a + 1;
        if (forms[a].key != forms[b].key || forms[a].vertices.size() != forms[b].vertices.size()) {
            continue;
        }
        for (std::size_t p = 0; p < forms[a].order.size(); ++p) {
            uf.unite(forms[a].vertices[forms[a].order[p]], forms[b].vertices[forms[b].order[p]]);
        }
    }
    std::vector<int> orbit(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        orbit[v] = uf.find(v);
    }
    return orbit;
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& map) {
    if (static_cast<int>(map.size()) != pattern.order()) {
        return false;
    }
    Mask used = 0;
    for (int h : map) {
        if (h < 0 || h >= host.order() || (used & bit(h)) != 0) {
            return false;
        }
        used |= bit(h);
    }
    for (int p = 0; p < pattern.order(); ++p) {
        for (int q = p + 1; q < pattern.order(); ++q) {
            if (pattern.adjacent(p, q) != host.adjacent(map[p], map[q])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

bool extend_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& sequence,
                      std::size_t depth, Embedding& map, Mask used) {
    if (depth == sequence.size()) {
        return true;
    }
    const int p = sequence[depth];
    for (int h = 0; h < host.order(); ++h) {
        if ((used & bit(h)) != 0 || host.degree(h) < pattern.degree(p)) {
            continue;
        }
        bool consistent = true;
        for (std::size_t i = 0; i < depth && consistent; ++i) {
            const int q = sequence[i];
            consistent = pattern.adjacent(p, q) == host.adjacent(h, map[q]);
        }
        if (!consistent) {
            continue;
        }
        map[p] = h;
        if (extend_embedding(host, pattern, sequence, depth + 1, map, used | bit(h))) {
            return true;
        }
    }
    map[p] = -1;
    return false;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) {
        return std::nullopt;
    }
    std::vector<int> sequence(static_cast<std::size_t>(pattern.order()));
    std::iota(sequence.begin(), sequence.end(), 0);
    std::stable_sort(sequence.begin(), sequence.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    Embedding map(static_cast<std::size_t>(pattern.order()), -1);
    if (extend_embedding(host, pattern, sequence, 0, map, 0)) {
        return map;
    }
    return std::nullopt;
}

}  // namespace spex
