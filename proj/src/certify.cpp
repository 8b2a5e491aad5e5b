#include "spex/certify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "spex/bounds.hpp"
#include "spex/canonical.hpp"
#include "spex/constructions.hpp"
#include "spex/spectra.hpp"

namespace spex {

namespace {

using Level = std::map<std::string, Graph>;

// Static strided split so the assignment of work never depends on timing.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t, int)>& body) {
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i, 0);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers)) {
                    body(i, w);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

void insert_canonical(Level& level, const Graph& g) {
    const Graph c = g.relabeled(canonical_labeling(g));
    level.try_emplace(to_graph6(c), c);
}

// Grow every parent by one step, dedup per worker, then merge.
Level expand(const Level& parents, int jobs, const std::function<void(const Graph&, Level&)>& grow) {
    std::vector<const Graph*> list;
    list.reserve(parents.size());
    for (const auto& [key, g] : parents) {
        list.push_back(&g);
    }
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(list.size())));
    std::vector<Level> local(static_cast<std::size_t>(workers));
    parallel_for(list.size(), workers, [&](std::size_t i, int w) { grow(*list[i], local[static_cast<std::size_t>(w)]); });
    Level merged;
    for (auto& part : local) {
        merged.merge(part);
    }
    return merged;
}

std::vector<Graph> values_of(const Level& level) {
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& [key, g] : level) {
        out.push_back(g);
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_edge_budget(int m, int lo) {
    if (m < lo) {
        throw std::invalid_argument("edge count must be at least " + std::to_string(lo));
    }
    if (m > kEnumerateMaxEdges) {
        throw BudgetExceeded("enumeration budget: m <= " + std::to_string(kEnumerateMaxEdges));
    }
}

void check_vertex_budget(int n, int lo) {
    if (n < lo) {
        throw std::invalid_argument("vertex count must be at least " + std::to_string(lo));
    }
    if (n > kEnumerateMaxVertices) {
        throw BudgetExceeded("enumeration budget: n <= " + std::to_string(kEnumerateMaxVertices));
    }
}

struct Scored {
    std::string key;
    double value = 0.0;
    bool connected = true;
};

struct Claim {
    std::string theorem;
    int parameter = 0;
    std::string filter;
    std::string quantity;
    double bound = 0.0;
    std::vector<std::string> expected;
    // Equality holds exactly on the expected set, rather than at least on it.
    bool iff = true;
};

CertificationReport judge(const Claim& claim, const std::vector<Graph>& graphs,
                          const std::function<double(const Graph&)>& quantity, int jobs,
                          std::chrono::steady_clock::time_point start) {
    std::vector<Scored> scored(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i, int) {
        scored[i] = Scored{to_graph6(graphs[i]), quantity(graphs[i]), is_connected(graphs[i].without_isolated())};
    });

    CertificationReport r;
    r.theorem = claim.theorem;
    r.parameter = claim.parameter;
    r.filter = claim.filter;
    r.quantity = claim.quantity;
    r.bound = claim.bound;
    r.graphs_examined = static_cast<long long>(graphs.size());
    r.expected_equality = claim.expected;
    std::sort(r.expected_equality.begin(), r.expected_equality.end());

    std::set<std::string> present;
    std::set<std::string> candidates;
    const Scored* worst = nullptr;
    r.max_value = scored.empty() ? 0.0 : scored.front().value;
    for (const Scored& s : scored) {
        present.insert(s.key);
        r.max_value = std::max(r.max_value, s.value);
        if (std::abs(s.value - claim.bound) <= kEqualityTol) {
            candidates.insert(s.key);
        }
        if (s.value > claim.bound + kEqualityTol && (worst == nullptr || s.value > worst->value)) {
            worst = &s;
        }
    }
    bool maximizers_connected = true;
    for (const Scored& s : scored) {
        if (s.value >= r.max_value - kMaximizerTol) {
            r.maximizers.push_back(s.key);
            maximizers_connected = maximizers_connected && s.connected;
        }
    }
    std::sort(r.maximizers.begin(), r.maximizers.end());
    r.equality_graphs.assign(candidates.begin(), candidates.end());

    if (worst != nullptr) {
        r.verdict = Verdict::Violated;
        r.counterexample = worst->key;
        r.notes.push_back("bound exceeded");
    }
    // Numerics nominate equality graphs; canonical forms decide.
    for (const std::string& key : r.expected_equality) {
        if (!present.count(key)) {
            r.notes.push_back("expected extremal graph " + key + " not in class");
        } else if (!candidates.count(key) && r.verdict != Verdict::Violated) {
            r.verdict = Verdict::Violated;
            r.counterexample = key;
            r.notes.push_back("expected extremal graph misses the bound");
        }
    }
    if (claim.iff && r.verdict != Verdict::Violated) {
        const std::set<std::string> expected(r.expected_equality.begin(), r.expected_equality.end());
        for (const std::string& key : candidates) {
            if (!expected.count(key)) {
                r.verdict = Verdict::Violated;
                r.counterexample = key;
                r.notes.push_back("equality outside the characterized class");
                break;
            }
        }
    }
    if (r.verdict != Verdict::Violated) {
        r.verdict = candidates.empty() ? Verdict::Holds : Verdict::HoldsWithEquality;
    }
    if (!scored.empty()) {
        r.notes.push_back(std::string("maximizers connected: ") + (maximizers_connected ? "yes" : "no"));
    }
    r.wall_time = seconds_since(start);
    return r;
}

double lambda(const Graph& g) { return g.order() == 0 ? 0.0 : spectral_radius(g); }

}  // namespace

bool ClassFilter::accepts_partial(const Graph& g) const {
    if (triangle_free && !is_triangle_free(g)) {
        return false;
    }
    if (c5_free && contains_c5(g)) {
        return false;
    }
    if (odd_girth_min > 0 && odd_girth(g) < odd_girth_min) {
        return false;
    }
    return true;
}

bool ClassFilter::accepts(const Graph& g) const {
    if (g.size() != m || !accepts_partial(g)) {
        return false;
    }
    if (connected && !is_connected(g)) {
        return false;
    }
    return !(non_bipartite && is_bipartite(g));
}

std::string ClassFilter::describe() const {
    std::string s = "m=" + std::to_string(m);
    if (connected) {
        s += " connected";
    }
    if (triangle_free) {
        s += " triangle-free";
    }
    if (c5_free) {
        s += " c5-free";
    }
    if (odd_girth_min > 0) {
        s += " odd-girth>=" + std::to_string(odd_girth_min);
    }
    if (non_bipartite) {
        s += " non-bipartite";
    }
    return s;
}

std::vector<Graph> enumerate(const ClassFilter& filter, int jobs) {
    check_edge_budget(filter.m, 0);
    Level level;
    level.emplace(to_graph6(Graph(0)), Graph(0));
    int edges = 0;
    if (filter.connected && filter.m > 0) {
        level.clear();
        insert_canonical(level, complete_graph(2));
        edges = 1;
    }
    for (; edges < filter.m; ++edges) {
        level = expand(level, jobs, [&](const Graph& g, Level& out) {
            const int n = g.order();
            auto offer = [&](const Graph& child) {
                if (filter.accepts_partial(child)) {
                    insert_canonical(out, child);
                }
            };
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (!g.adjacent(u, v)) {
                        offer(g.with_edge(u, v));
                    }
                }
            }
            const std::vector<int> orbit = vertex_orbits(g);
            for (int u = 0; u < n; ++u) {
                if (orbit[static_cast<std::size_t>(u)] == u) {
                    offer(g.with_vertices(1).with_edge(u, n));
                }
            }
            if (!filter.connected) {
                offer(g.with_vertices(2).with_edge(n, n + 1));
            }
        });
    }
    std::vector<Graph> out;
    for (const auto& [key, g] : level) {
        if (filter.accepts(g)) {
            out.push_back(g);
        }
    }
    return out;
}

std::vector<Graph> enumerate_by_vertices(int n, bool triangle_free, int jobs) {
    check_vertex_budget(n, 0);
    Level level;
    level.emplace(to_graph6(Graph(0)), Graph(0));
    for (int k = 0; k < n; ++k) {
        level = expand(level, jobs, [&](const Graph& g, Level& out) {
            const int order = g.order();
            for (Graph::Mask s = 0; s < (Graph::Mask{1} << order); ++s) {
                bool independent = true;
                for (Graph::Mask rest = s; rest != 0 && independent; rest &= rest - 1) {
                    independent = (g.neighbours(std::countr_zero(rest)) & s) == 0;
                }
                if (triangle_free && !independent) {
                    continue;
                }
                Graph child = g.with_vertices(1);
                for (Graph::Mask rest = s; rest != 0; rest &= rest - 1) {
                    child = child.with_edge(std::countr_zero(rest), order);
                }
                insert_canonical(out, child);
            }
        });
    }
    return values_of(level);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "HOLDS";
        case Verdict::HoldsWithEquality: return "HOLDS_WITH_EQUALITY";
        case Verdict::Violated: return "VIOLATED";
    }
    throw std::invalid_argument("unknown verdict");
}

Verdict verdict_from_name(const std::string& name) {
    for (Verdict v : {Verdict::Holds, Verdict::HoldsWithEquality, Verdict::Violated}) {
        if (verdict_name(v) == name) {
            return v;
        }
    }
    throw std::invalid_argument("unknown verdict '" + name + "'");
}

CertificationReport certify_nosal(int m, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_edge_budget(m, 1);
    ClassFilter f{.m = m, .triangle_free = true};
    Claim c{"nosal", m, f.describe(), "lambda", std::sqrt(static_cast<double>(m)), {}, true};
    for (int s = 1; s * s <= m; ++s) {
        if (m % s == 0) {
            c.expected.push_back(canonical_form(complete_bipartite(s, m / s)));
        }
    }
    return judge(c, enumerate(f, jobs), lambda, jobs, start);
}

std::vector<std::string> lnw_equality_class(int m) {
    const std::vector<Graph> bases{path(2), disjoint_union(path(2), path(2)), path(4), path(5)};
    std::set<std::string> out;
    for (const Graph& base : bases) {
        const int k = base.order();
        std::vector<int> sizes(static_cast<std::size_t>(k), 1);
        const std::vector<Edge> edges = base.edges();
        // Odometer over sizes in [1, m]; parts larger than m cannot fit.
        while (true) {
            int count = 0;
            for (const Edge& e : edges) {
                count += sizes[static_cast<std::size_t>(e.u)] * sizes[static_cast<std::size_t>(e.v)];
            }
            if (count == m) {
                out.insert(canonical_form(blow_up(base, sizes)));
            }
            int i = 0;
            while (i < k && sizes[static_cast<std::size_t>(i)] == m) {
                sizes[static_cast<std::size_t>(i++)] = 1;
            }
            if (i == k) {
                break;
            }
            ++sizes[static_cast<std::size_t>(i)];
        }
    }
    return {out.begin(), out.end()};
}

CertificationReport certify_lnw_sum(int m, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_edge_budget(m, 1);
    ClassFilter f{.m = m, .triangle_free = true};
    Claim c{"lnw", m, f.describe(), "lambda1^2+lambda2^2", static_cast<double>(m), lnw_equality_class(m), true};
    auto r = judge(c, enumerate(f, jobs),
                   [](const Graph& g) {
                       const Spectrum s = eigenvalues(g);
                       return s[0] * s[0] + s[1] * s[1];
                   },
                   jobs, start);
    r.notes.push_back("equality class: blow-ups of P2, 2P2, P4, P5 with parts >= 1");
    return r;
}

CertificationReport certify_thm15(int m, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_edge_budget(m, 2);
    ClassFilter f{.m = m, .triangle_free = true, .non_bipartite = true};
    Claim c{"thm15", m, f.describe(), "lambda", std::sqrt(m - 1.0), {}, true};
    if (m == 5) {
        c.expected.push_back(canonical_form(cycle(5)));
    }
    return judge(c, enumerate(f, jobs), lambda, jobs, start);
}

CertificationReport certify_zhai_shu(int m, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_edge_budget(m, 5);
    ClassFilter f{.m = m, .triangle_free = true, .non_bipartite = true};
    Claim c{"zhai-shu", m, f.describe(), "lambda", beta(m), {}, true};
    if (m % 2 == 1) {
        c.expected.push_back(canonical_form(sk(2, (m - 1) / 2)));
    }
    return judge(c, enumerate(f, jobs), lambda, jobs, start);
}

CertificationReport certify_main(int m, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_edge_budget(m, 7);
    ClassFilter f{.m = m, .triangle_free = true, .c5_free = true, .non_bipartite = true};
    Claim c{"main", m, f.describe(), "lambda", gamma(m), {}, true};
    if (m % 2 == 1) {
        c.expected.push_back(canonical_form(s_odd(2, (m - 3) / 2, 2)));
    }
    return judge(c, enumerate(f, jobs), lambda, jobs, start);
}

CertificationReport certify_mantel(int n, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_vertex_budget(n, 1);
    Claim c{"mantel", n, "n=" + std::to_string(n) + " triangle-free", "edges", static_cast<double>(n * n / 4), {}, true};
    c.expected.push_back(canonical_form(complete_bipartite(n / 2, n - n / 2)));
    return judge(c, enumerate_by_vertices(n, true, jobs), [](const Graph& g) { return double(g.size()); }, jobs,
                 start);
}

CertificationReport certify_erdos(int n, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_vertex_budget(n, 5);
    std::vector<Graph> graphs;
    for (Graph& g : enumerate_by_vertices(n, true, jobs)) {
        if (!is_bipartite(g)) {
            graphs.push_back(std::move(g));
        }
    }
    Claim c{"erdos", n, "n=" + std::to_string(n) + " triangle-free non-bipartite", "edges",
            static_cast<double>((n - 1) * (n - 1) / 4 + 1), {}, false};
    std::set<std::string> constructions;
    for (int x1 = 1; x1 < n / 2; ++x1) {
        constructions.insert(canonical_form(erdos_construction(n, x1)));
    }
    c.expected.assign(constructions.begin(), constructions.end());
    auto r = judge(c, graphs, [](const Graph& g) { return double(g.size()); }, jobs, start);
    r.notes.push_back("extremal graphs are not unique; every construction must attain the bound");
    return r;
}

CertificationReport certify_conj51(int m, int k, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_edge_budget(m, 1);
    if (k < 1 || 2 * k + 1 >= m) {
        throw std::invalid_argument("conj51: need k >= 1 and 2k + 1 < m");
    }
    if (k >= 3 && m % 2 == 0) {
        throw std::invalid_argument("conj51: k >= 3 needs odd m (the extremal graph is only defined there)");
    }
    ClassFilter f{.m = m, .triangle_free = true, .c5_free = k >= 2, .non_bipartite = true,
                  .odd_girth_min = 2 * k + 3};
    double bound = 0.0;
    if (k == 1) {
        bound = beta(m);
    } else if (k == 2) {
        bound = gamma(m);
    } else {
        bound = spectral_radius(s_odd(2, (m - 2 * k + 1) / 2, k));
    }
    Claim c{"conj51", m, f.describe(), "lambda", bound, {}, true};
    if (m % 2 == 1) {
        c.expected.push_back(canonical_form(s_odd(2, (m - 2 * k + 1) / 2, k)));
    }
    auto r = judge(c, enumerate(f, jobs), lambda, jobs, start);
    r.conjecture = true;
    r.notes.push_back("k=" + std::to_string(k) + "; CONJECTURE: exhaustive evidence, not a proof");
    return r;
}

BooksizeReport explore_booksize(int m, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    check_edge_budget(m, 1);
    const std::vector<Graph> graphs = enumerate(ClassFilter{.m = m}, jobs);
    std::vector<int> bk(graphs.size(), -1);
    const double root = std::sqrt(static_cast<double>(m));
    parallel_for(graphs.size(), jobs, [&](std::size_t i, int) {
        const Graph& g = graphs[i];
        if (!is_complete_bipartite(g) && spectral_radius(g) >= root - kMaximizerTol) {
            bk[i] = booksize(g);
        }
    });
    BooksizeReport r;
    r.m = m;
    r.graphs_examined = static_cast<long long>(graphs.size());
    r.booksize_floor = std::pow(static_cast<double>(m), 0.25) / 12.0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (bk[i] < 0) {
            continue;
        }
        ++r.candidates;
        r.floor_holds = r.floor_holds && bk[i] > r.booksize_floor;
        if (r.min_graphs.empty() || bk[i] < r.min_booksize) {
            r.min_booksize = bk[i];
            r.min_graphs.clear();
        }
        if (bk[i] == r.min_booksize) {
            r.min_graphs.push_back(to_graph6(graphs[i]));
        }
    }
    r.ratio = r.candidates > 0 ? r.min_booksize / root : 0.0;
    r.wall_time = seconds_since(start);
    return r;
}

}  // namespace spex
