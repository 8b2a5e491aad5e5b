#include "doctest.h"
#include "oracles.hpp"
#include "spex/canonical.hpp"
#include "spex/constructions.hpp"
#include "spex/graph.hpp"
#include "spex/spectra.hpp"

using namespace spex;

TEST_CASE("graph rejects loops, duplicates and out-of-range vertices") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    const Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.degree(2) == 2);
}

TEST_CASE("complete bipartite") {
    const Graph p2 = complete_bipartite(1, 1);
    CHECK(p2.order() == 2);
    CHECK(p2.size() == 1);
    const Graph c4 = complete_bipartite(2, 2);
    CHECK(c4.size() == 4);
    CHECK(spectral_radius(c4) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(complete_bipartite(3, 4).size() == 12);
    CHECK(is_bipartite(complete_bipartite(3, 4)));
    CHECK(is_triangle_free(complete_bipartite(3, 4)));
    CHECK(complete_bipartite(0, 3).size() == 0);
}

TEST_CASE("cycles and paths") {
    CHECK(isomorphic(cycle(5), sk(2, 2)));
    CHECK(spectral_radius(cycle(7)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(path(1).order() == 1);
    CHECK(path(1).size() == 0);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("subdivision") {
    const Graph c4 = complete_bipartite(2, 2);
    CHECK(isomorphic(subdivide_edge(c4, {0, 2}, 1), cycle(5)));
    CHECK(isomorphic(subdivide_edge(c4, {0, 2}, 3), cycle(7)));
    CHECK(isomorphic(s_odd(2, 2, 2), cycle(7)));
    CHECK_THROWS_AS(subdivide_edge(c4, {0, 1}, 1), std::invalid_argument);
    for (int m : {5, 7, 9, 11, 13}) {
        const Graph g = sk(2, (m - 1) / 2);
        CHECK(g.size() == m);
        CHECK(g.order() == (m - 1) / 2 + 3);
    }
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b) {
            CHECK(sk(a, b) == s_odd(a, b, 1));
            CHECK(edge_count(sk(a, b)) == a * b + 1);
            for (int k = 1; k <= 4; ++k) {
                const Graph g = s_odd(a, b, k);
                CHECK(odd_girth(g) == 2 * k + 3);
                CHECK(is_connected(g));
                CHECK(g.size() == a * b + 2 * k - 1);
            }
        }
}

TEST_CASE("star plus edge") {
    for (int m = 3; m <= 20; ++m) {
        const Graph g = star_plus_edge(m);
        CHECK(g.size() == m);
        CHECK(g.order() == m);
        CHECK(triangle_count(g) == 1);
    }
    CHECK(spectral_radius(star_plus_edge(9)) == doctest::Approx(3.0).epsilon(1e-12));
    const Spectrum s = eigenvalues(star_plus_edge(20));
    CHECK(s[0] == doctest::Approx(4.425).epsilon(1e-3));
    CHECK(s[1] == doctest::Approx(0.890).epsilon(1e-3));
    CHECK(s[0] * s[0] + s[1] * s[1] == doctest::Approx(20.372).epsilon(2.5e-4));
}

TEST_CASE("blow-up, book and disjoint union") {
    const std::vector<int> st{3, 4};
    CHECK(isomorphic(blow_up(path(2), st), complete_bipartite(3, 4)));
    const Graph p5k1 = disjoint_union(path(5), empty_graph(1));
    const std::vector<int> ones(6, 1);
    CHECK(blow_up(p5k1, ones) == p5k1);
    const std::vector<int> zero{1, 0};
    CHECK_THROWS_AS(blow_up(path(2), zero), std::invalid_argument);

    CHECK(isomorphic(book(1), complete_graph(3)));
    CHECK(isomorphic(book(2), complete_graph(4).without_edge(0, 1)));
    for (int k = 1; k <= 6; ++k) {
        CHECK(book(k).order() == k + 2);
        CHECK(book(k).size() == 2 * k + 1);
        CHECK(booksize(book(k)) == k);
    }
    CHECK(disjoint_union(cycle(5), Graph(0)) == cycle(5));
    CHECK(disjoint_union(path(2), path(2)).size() == 2);

    // Spectrum of a union is the multiset union.
    const Spectrum u = eigenvalues(disjoint_union(cycle(5), complete_graph(3)));
    std::vector<double> expect = eigenvalues(cycle(5)).values;
    for (double x : eigenvalues(complete_graph(3)).values) expect.push_back(x);
    std::sort(expect.rbegin(), expect.rend());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(u[i] == doctest::Approx(expect[i]).epsilon(1e-9));
}

TEST_CASE("blow-ups of triangle-free graphs stay triangle-free") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> part(1, 3);
    for (const Graph& base : {cycle(5), cycle(7), sk(2, 3), path(5), complete_bipartite(2, 3)}) {
        std::vector<int> sizes(static_cast<std::size_t>(base.order()));
        for (int& s : sizes) s = part(rng);
        CHECK(is_triangle_free(blow_up(base, sizes)));
    }
}

TEST_CASE("erdos construction") {
    for (int n = 5; n <= 12; ++n)
        for (int x1 = 1; x1 < n / 2; ++x1) {
            const Graph g = erdos_construction(n, x1);
            CHECK(g.order() == n);
            CHECK(g.size() == (n - 1) * (n - 1) / 4 + 1);
            CHECK(is_triangle_free(g));
            CHECK_FALSE(is_bipartite(g));
        }
    CHECK(isomorphic(erdos_construction(5, 1), cycle(5)));
    CHECK_THROWS_AS(erdos_construction(6, 3), std::invalid_argument);
}

TEST_CASE("predicates") {
    CHECK(odd_girth(cycle(5)) == 5);
    CHECK(odd_girth(complete_bipartite(3, 4)) == kInfiniteGirth);
    CHECK(odd_girth(s_odd(3, 4, 2)) == 7);
    CHECK_FALSE(is_bipartite(sk(2, 4)));
    CHECK_FALSE(is_triangle_free(complete_graph(3)));
    CHECK(triangle_count(complete_graph(3)) == 1);
    CHECK(triangle_count(complete_graph(4)) == 4);
    CHECK(booksize(cycle(5)) == 0);
    CHECK(booksize(complete_graph(5)) == 3);
    CHECK(contains_c5(cycle(5)));
    CHECK(contains_c5(complete_graph(5)));
    CHECK_FALSE(contains_c5(cycle(7)));
    CHECK_FALSE(is_connected(disjoint_union(path(2), path(2))));
    CHECK(is_complete_bipartite(disjoint_union(complete_bipartite(2, 3), empty_graph(2))));
    CHECK_FALSE(is_complete_bipartite(cycle(6)));
}

TEST_CASE("predicates agree with brute-force oracles on random graphs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(1, 10);
    std::uniform_real_distribution<double> dens(0.1, 0.7);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = oracle::random_graph(rng, size(rng), dens(rng));
        CHECK(triangle_count(g) == oracle::brute_triangles(g));
        CHECK(booksize(g) == oracle::brute_booksize(g));
        CHECK((booksize(g) == 0) == is_triangle_free(g));
        CHECK(contains_c5(g) == oracle::brute_has_c5(g));
        CHECK(is_connected(g) == oracle::bfs_connected(g));
        const int og = oracle::trace_odd_girth(g);
        CHECK(odd_girth(g) == (og == 0 ? kInfiniteGirth : og));
        CHECK(is_bipartite(g) == (og == 0));
    }
}

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(from_graph6(">>graph6<<Dhc") == cycle(5));
    CHECK(from_graph6("Dhc\n") == cycle(5));
}

TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> size(0, 64);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, size(rng), 0.3);
        const std::string s = to_graph6(g);
        CHECK(from_graph6(s) == g);
        CHECK(to_graph6(from_graph6(s)) == s);
    }
}

TEST_CASE("graph6 errors carry the byte position") {
    auto position = [](const std::string& s) -> long long {
        try {
            from_graph6(s);
        } catch (const Graph6Error& e) {
            return static_cast<long long>(e.position());
        }
        return -1;
    };
    CHECK(position("A%") == 1);
    CHECK(position("") == 0);
    CHECK(position("D") == 1);
    CHECK(position("Dhcc") == 3);
    CHECK(position("A@") == 1);  // nonzero padding bits
}
