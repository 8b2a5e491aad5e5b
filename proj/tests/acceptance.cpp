// One PASS/FAIL line per acceptance criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "spex/bounds.hpp"
#include "spex/canonical.hpp"
#include "spex/certify.hpp"
#include "spex/constructions.hpp"
#include "spex/gallery.hpp"
#include "spex/spectra.hpp"

using namespace spex;

namespace {

struct Check {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

IntPoly x_pow(int k) { return IntPoly::monomial(BigInt(1), static_cast<std::size_t>(k)); }

Check tables() {
    Check c;
    for (PatternId id : kAllPatterns) {
        const auto row = reference_spectrum(id);
        if (row.empty()) continue;
        const Spectrum s = eigenvalues(pattern(id));
        c.require(s.size() == row.size(), std::string(pattern_name(id)) + " order");
        for (std::size_t i = 0; i < row.size() && i < s.size(); ++i)
            c.require(std::abs(s[i] - row[i]) <= 1e-3, std::string(pattern_name(id)) + " entry " + std::to_string(i));
    }
    return c;
}

Check identities() {
    Check c;
    for (int m = 5; m <= 25; m += 2)
        c.require(char_poly(sk(2, (m - 1) / 2)) == x_pow((m - 5) / 2) * int_poly({-1, 1, 1}) * z_poly(m),
                  "SK_{2,b} at m=" + std::to_string(m));
    for (int m = 7; m <= 25; m += 2)
        c.require(char_poly(s_odd(2, (m - 3) / 2, 2)) == x_pow((m - 7) / 2) * l_poly(m),
                  "S3(K_{2,b}) at m=" + std::to_string(m));
    for (int a = 2; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) {
            const int ab = a * b;
            const IntPoly display =
                int_poly({-2 * ab + 2 * a + 2 * b - 2, 3 * ab - 2 * a - 2 * b + 1, 0, -(ab + 1), 0, 1});
            c.require(char_poly(sk(a, b)) == x_pow(a + b - 4) * display, "SK_{a,b} display");
        }
    for (int m = 3; m <= 1000; ++m) c.require(h_poly(m) == int_poly({-1, 1, 1}) * z_poly(m), "H at m=" + std::to_string(m));
    return c;
}

Check brackets() {
    Check c;
    for (int m = 6; m <= 10000; ++m) {
        const double b = beta(m);
        c.require(std::sqrt(m - 2.0) < b && b < std::sqrt(m - 1.0), "beta bracket at m=" + std::to_string(m));
        c.require(sign_at_sqrt(z_poly(m), m - 2) < 0 && sign_at_sqrt(z_poly(m), m - 1) > 0,
                  "Z endpoint signs at m=" + std::to_string(m));
    }
    for (int m = 7; m <= 10000; ++m) {
        const double g = gamma(m);
        c.require(std::sqrt(m - 4.0) < g && g <= std::sqrt(m - 3.0), "gamma bracket at m=" + std::to_string(m));
        c.require(sign_at_sqrt(l_poly(m), m - 4) < 0 && sign_at_sqrt(l_poly(m), m - 3) >= 0,
                  "L endpoint signs at m=" + std::to_string(m));
    }
    c.require(std::abs(gamma(7) - 2.0) <= 1e-10, "gamma(7)");
    for (int m = 5; m <= 25; m += 2)
        c.require(std::abs(beta(m) - spectral_radius(sk(2, (m - 1) / 2))) <= 1e-8, "beta vs SK at m=" + std::to_string(m));
    return c;
}

Check certification(int jobs) {
    Check c;
    for (int m = 5; m <= 10; ++m) {
        const auto r = certify_zhai_shu(m, jobs);
        const bool odd = m % 2 == 1;
        c.require(r.verdict == (odd ? Verdict::HoldsWithEquality : Verdict::Holds), "zhai-shu verdict m=" + std::to_string(m));
        if (odd)
            c.require(r.equality_graphs == std::vector<std::string>{canonical_form(sk(2, (m - 1) / 2))},
                      "zhai-shu equality m=" + std::to_string(m));
    }
    for (int m = 7; m <= 10; ++m) {
        const auto r = certify_main(m, jobs);
        const bool odd = m % 2 == 1;
        c.require(r.verdict == (odd ? Verdict::HoldsWithEquality : Verdict::Holds), "main verdict m=" + std::to_string(m));
        if (odd)
            c.require(r.equality_graphs == std::vector<std::string>{canonical_form(s_odd(2, (m - 3) / 2, 2))},
                      "main equality m=" + std::to_string(m));
    }
    for (int m = 3; m <= 10; ++m) {
        const auto t = certify_thm15(m, jobs);
        c.require(t.verdict == (m == 5 ? Verdict::HoldsWithEquality : Verdict::Holds), "thm15 m=" + std::to_string(m));
        if (m == 5) c.require(t.equality_graphs == std::vector<std::string>{canonical_form(cycle(5))}, "thm15 C5");

        const auto n = certify_nosal(m, jobs);
        c.require(n.verdict != Verdict::Violated, "nosal m=" + std::to_string(m));
        std::vector<std::string> kst;
        for (int s = 1; s * s <= m; ++s)
            if (m % s == 0 && s * s == m) kst.push_back(canonical_form(complete_bipartite(s, s)));
            else if (m % s == 0) kst.push_back(canonical_form(complete_bipartite(s, m / s)));
        std::sort(kst.begin(), kst.end());
        c.require(n.equality_graphs == kst, "nosal equality class m=" + std::to_string(m));

        const auto l = certify_lnw_sum(m, jobs);
        c.require(l.verdict != Verdict::Violated, "lnw m=" + std::to_string(m));
        c.require(l.equality_graphs == lnw_equality_class(m), "lnw equality class m=" + std::to_string(m));
    }
    return c;
}

Check triangles() {
    Check c;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> size(1, 12);
    std::uniform_real_distribution<double> dens(0.1, 0.9);
    for (int i = 0; i < 500; ++i) {
        const Graph g = random_graph(rng, size(rng), dens(rng));
        const Spectrum s = eigenvalues(g);
        const double t = static_cast<double>(triangle_count(g));
        c.require(std::abs(triangle_count_trace(s) - t) <= 1e-6 * (1 + t), "trace count");
        c.require(std::abs(triangle_count_lemma(s, g.size()) - t) <= 1e-6 * (1 + t), "lemma count");
    }
    for (PatternId id : kAllPatterns) {
        const Graph g = pattern(id);
        const Spectrum s = eigenvalues(g);
        c.require(triangle_count(g) == 0, "gallery triangle");
        c.require(std::abs(triangle_count_trace(s)) <= 1e-9 && std::abs(triangle_count_lemma(s, g.size())) <= 1e-9,
                  std::string("gallery spectral count ") + std::string(pattern_name(id)));
    }
    return c;
}

Check interlacing() {
    Check c;
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> size(2, 10);
    for (int i = 0; i < 200; ++i) {
        const int n = size(rng);
        const Graph g = random_graph(rng, n, 0.5);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        perm.resize(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, n)(rng)));
        c.require(verify_interlacing(eigenvalues(g), eigenvalues(g.induced(perm))), "random pair");
    }
    int located = 0;
    for (PatternId id : kAllPatterns) {
        const Graph g = pattern(id);
        if (const auto emb = find_induced(g, cycle(7))) {
            ++located;
            c.require(verify_interlacing(eigenvalues(g), eigenvalues(cycle(7))),
                      std::string("C7 in ") + std::string(pattern_name(id)));
        }
    }
    c.require(located >= 8, "C7 located in the gallery");
    return c;
}

Check counterexamples() {
    Check c;
    const Spectrum s = eigenvalues(star_plus_edge(20));
    const double sum = s[0] * s[0] + s[1] * s[1];
    c.require(std::abs(sum - 20.372) <= 5e-3 && sum > 20, "K_{1,19}^+ sum");
    c.require(std::abs(spectral_radius(star_plus_edge(9)) - 3) <= 1e-9, "K_{1,8}^+");
    for (int m = 11; m <= 30; ++m) c.require(spectral_radius(star_plus_edge(m)) < std::sqrt(m), "below sqrt m");
    for (int m = 4; m <= 8; ++m) c.require(spectral_radius(star_plus_edge(m)) > std::sqrt(m), "above sqrt m");
    return c;
}

Check pendants() {
    Check c;
    for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        const auto r = lemma42_check(a, b);
        c.require(r.cases.size() == 7 && r.all_below, "pendant cases (" + std::to_string(a) + "," + std::to_string(b) + ")");
        for (const auto& pc : r.cases) c.require(pc.margin > 0, "margin");
    }
    return c;
}

Check properties() {
    Check c;
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> size(1, 14);
    std::uniform_real_distribution<double> dens(0.1, 0.8);
    for (int i = 0; i < 300; ++i) {
        const int n = size(rng);
        const Graph g = random_graph(rng, n, dens(rng));
        const Spectrum s = eigenvalues(g);
        double sum = 0, sq = 0;
        for (double x : s.values) {
            sum += x;
            sq += x * x;
            c.require(std::abs(x) <= s[0] + s.slack(), "Perron-Frobenius");
        }
        c.require(std::abs(sum) <= 10 * n * s.slack(), "trace A");
        c.require(std::abs(sq - 2.0 * g.size()) <= 1e-8 * (1 + g.size()), "trace A^2");
        c.require(from_graph6(to_graph6(g)) == g, "graph6 round trip");
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        c.require(canonical_form(g.relabeled(perm)) == canonical_form(g), "relabeling invariance");
    }
    std::uniform_int_distribution<int> mm(3, 400);
    std::uniform_real_distribution<double> pt(-25.0, 0.0);
    for (int i = 0; i < 1000; ++i) {
        const int m = mm(rng);
        double a = pt(rng), b = pt(rng);
        if (a > b) std::swap(a, b);
        double grid = f_val(m, a);
        for (int k = 1; k <= 10000; ++k) grid = std::min(grid, f_val(m, a + (b - a) * k / 10000));
        c.require(std::abs(f_min_on_interval(m, a, b) - grid) <= 1e-9 * (1 + std::abs(grid)), "f_min vs grid");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const int jobs = argc > 1 ? std::max(1, std::atoi(argv[1])) : 4;
    struct Item {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    const Item items[] = {
        {1, "table reproduction", tables},
        {2, "characteristic polynomial identities", identities},
        {3, "root brackets", brackets},
        {4, "exhaustive certification", [jobs] { return certification(jobs); }},
        {5, "spectral triangle counting", triangles},
        {6, "interlacing", interlacing},
        {7, "star-plus-edge examples", counterexamples},
        {8, "pendant cases below gamma", pendants},
        {9, "property suites", properties},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const Item& item : items) {
        const auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = item.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %d %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", item.id, item.name, secs, c.ok ? "" : ": ",
                    c.why.c_str());
        failed += !c.ok;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/9 criteria passed in %.1fs\n", 9 - failed, total);
    return failed == 0 ? 0 : 2;
}
