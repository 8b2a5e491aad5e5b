#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spex/bounds.hpp"
#include "spex/canonical.hpp"
#include "spex/constructions.hpp"
#include "spex/spectra.hpp"

using namespace spex;

namespace {

IntPoly x_pow(std::size_t k) { return IntPoly::monomial(BigInt(1), k); }

}  // namespace

TEST_CASE("Z and H polynomials") {
    CHECK(z_poly(5) == int_poly({2, -3, -1, 1}));
    CHECK(z_poly(5) == int_poly({-2, 1}) * int_poly({-1, 1, 1}));
    for (int m = 3; m <= 1000; ++m) CHECK(h_poly(m) == int_poly({-1, 1, 1}) * z_poly(m));
    CHECK(l_poly(7) == int_poly({-2, -7, 0, 14, 0, -7, 0, 1}));
    CHECK(l_poly(7).eval_exact(BigInt(2)) == 0);
}

TEST_CASE("beta examples") {
    CHECK(beta(5) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(beta_bracket(5).closed_hi);
    CHECK(beta(9) == doctest::Approx(2.751532071548).epsilon(1e-11));
    CHECK(beta(9) == doctest::Approx(spectral_radius(sk(2, 4))).epsilon(1e-10));
    CHECK_THROWS_AS(beta(4), std::invalid_argument);
}

TEST_CASE("gamma examples") {
    CHECK(std::abs(gamma(7) - 2.0) <= 1e-10);
    CHECK(gamma(9) == doctest::Approx(2.338660949418).epsilon(1e-11));
    CHECK(gamma(9) == doctest::Approx(spectral_radius(s_odd(2, 3, 2))).epsilon(1e-10));
    CHECK_THROWS_AS(gamma(6), std::invalid_argument);
}

TEST_CASE("beta and gamma brackets") {
    for (int m = 6; m <= 10000; m += (m < 200 ? 1 : 37)) {
        const double b = beta(m);
        CHECK(b > std::sqrt(m - 2.0));
        CHECK(b < std::sqrt(m - 1.0));
        // Exact signs at the analytic endpoints.
        CHECK(sign_at_sqrt(z_poly(m), m - 2) < 0);
        CHECK(sign_at_sqrt(z_poly(m), m - 1) > 0);
        CHECK(std::abs(z_poly(m).eval(static_cast<long double>(b))) <= 1e-10L * m);
    }
    for (int m = 7; m <= 10000; m += (m < 200 ? 1 : 37)) {
        const double g = gamma(m);
        CHECK(g > std::sqrt(m - 4.0));
        CHECK(g <= std::sqrt(m - 3.0) + 1e-15);
        CHECK(sign_at_sqrt(l_poly(m), m - 4) < 0);
        CHECK(sign_at_sqrt(l_poly(m), m - 3) >= 0);
    }
}

TEST_CASE("beta and gamma against the extremal graphs") {
    for (int m = 5; m <= 25; m += 2) {
        CHECK(std::abs(beta(m) - spectral_radius(sk(2, (m - 1) / 2))) <= 1e-8);
        const IntPoly expect = x_pow(static_cast<std::size_t>((m - 5) / 2)) * int_poly({-1, 1, 1}) * z_poly(m);
        CHECK(char_poly(sk(2, (m - 1) / 2)) == expect);
        CHECK(charpoly_identity_sk2(m));
    }
    for (int m = 7; m <= 25; m += 2) {
        CHECK(std::abs(gamma(m) - spectral_radius(s_odd(2, (m - 3) / 2, 2))) <= 1e-8);
        CHECK(char_poly(s_odd(2, (m - 3) / 2, 2)) == x_pow(static_cast<std::size_t>((m - 7) / 2)) * l_poly(m));
        CHECK(charpoly_identity_s3(m));
    }
}

TEST_CASE("subdivided complete bipartite polynomial") {
    for (int a = 2; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) {
            const int ab = a * b;
            const IntPoly display = int_poly({-2 * ab + 2 * a + 2 * b - 2, 3 * ab - 2 * a - 2 * b + 1, 0, -(ab + 1), 0, 1});
            CHECK(sk_poly(a, b) == display);
            CHECK(char_poly(sk(a, b)) == x_pow(static_cast<std::size_t>(a + b - 4)) * display);
            CHECK(charpoly_identity_sk(a, b));
            CHECK(charpoly_identity_q(a, b));
        }
}

TEST_CASE("H - F identity") {
    const RatPoly d = identity_h_minus_f(3, 13);
    CHECK(d == RatPoly({Rational(2), Rational(-2)}));
    for (int a = 2; a <= 8; ++a)
        for (int m = 5; m <= 60; ++m) CHECK_NOTHROW(identity_h_minus_f(a, m));
}

TEST_CASE("f and g") {
    CHECK(f_val(11, -1.0) == doctest::Approx(std::sqrt(9.0) - 1.0));
    CHECK(g_val(8, -1.0) == doctest::Approx(1.0));
    const int m = 11;
    const double lo = -std::sqrt(m - 4.744), hi = -1.801;
    const double v = f_min_on_interval(m, lo, hi);
    CHECK(v == doctest::Approx(std::min(f_val(m, lo), f_val(m, hi))));
    CHECK(v > std::sqrt(m - 2.0));
    CHECK_THROWS_AS(f_min_on_interval(m, -1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(f_min_on_interval(m, -1.0, -2.0), std::invalid_argument);
}

TEST_CASE("f minimum sits at an endpoint") {
    std::mt19937_64 rng(1000);
    std::uniform_int_distribution<int> mm(3, 400);
    std::uniform_real_distribution<double> pt(-25.0, 0.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = mm(rng);
        double a = pt(rng), b = pt(rng);
        if (a > b) std::swap(a, b);
        const double grid = oracle::grid_min([m](double x) { return f_val(m, x); }, a, b, 10000);
        CHECK(std::abs(f_min_on_interval(m, a, b) - grid) <= 1e-9 * (1 + std::abs(grid)));
    }
}

TEST_CASE("pendant residual") {
    CHECK(e_minus_xl(3, 4) == e_residual_displayed(3, 4));
    CHECK(e_residual_displayed(3, 4) == int_poly({6, -1, -24, 0, 9}));
    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 5; ++b) CHECK(e_poly(a, b, kDisplayedPendantSite) == e_poly(a, b));
}

TEST_CASE("pendant cases stay below gamma") {
    const std::pair<int, int> cases[] = {{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}};
    const int distinct[] = {1, 4, 4, 4, 7};
    for (std::size_t i = 0; i < std::size(cases); ++i) {
        const auto [a, b] = cases[i];
        const Lemma42Report r = lemma42_check(a, b);
        CHECK(r.m == a * b + 4);
        CHECK(r.cases.size() == static_cast<std::size_t>(kPendantCases));
        CHECK(r.all_below);
        CHECK(r.displayed_matches_e);
        CHECK(r.distinct_graphs == distinct[i]);
        for (const PendantCase& c : r.cases) {
            const Graph g = s3_with_pendant(a, b, c.site);
            CHECK(c.canonical == canonical_form(g));
            CHECK(c.lambda == doctest::Approx(oracle::eigen_spectrum(g).front()).epsilon(1e-9));
            CHECK(c.margin > 0);
            CHECK(c.margin == doctest::Approx(gamma(a * b + 4) - c.lambda));
        }
    }
}
