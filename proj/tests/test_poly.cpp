#include <cmath>
#include <random>

#include "doctest.h"
#include "spex/poly.hpp"

using namespace spex;

TEST_CASE("polynomial arithmetic") {
    const IntPoly a = int_poly({1, 1});   // x + 1
    const IntPoly b = int_poly({-1, 1});  // x - 1
    CHECK(a * b == int_poly({-1, 0, 1}));
    CHECK(a + b == int_poly({0, 2}));
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(int_poly({0, 0, 3, 0}).degree() == 2);
    CHECK(int_poly({0, 0, 3}).x_valuation() == 2);
    CHECK(int_poly({0, 0, 3}).shifted_down(2) == int_poly({3}));
    CHECK_THROWS_AS(int_poly({1, 0, 3}).shifted_down(1), std::domain_error);
    CHECK(int_poly({5, 3, 1}).derivative() == int_poly({3, 2}));
    CHECK(int_poly({2, -3, -1, 1}).eval_exact(BigInt(2)) == 0);
    CHECK(to_string(int_poly({2, -3, -1, 1})) == "x^3 - x^2 - 3x + 2");
    CHECK(to_string(int_poly({-1, 0, 1})) == "x^2 - 1");
    CHECK(to_string(IntPoly()) == "0");
    CHECK(to_string(RatPoly({Rational(1, 2), Rational(0), Rational(1)})) == "x^2 + 1/2");
}

TEST_CASE("exact sign at square roots") {
    const IntPoly p = int_poly({-2, 0, 1});  // x^2 - 2
    CHECK(sign_at_sqrt(p, 2) == 0);
    CHECK(sign_at_sqrt(p, 3) == 1);
    CHECK(sign_at_sqrt(p, 1) == -1);
    const IntPoly q = int_poly({-3, 1, 0, 1});  // x^3 + x - 3
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (int trial = 0; trial < 500; ++trial) {
        const IntPoly r = int_poly({coef(rng), coef(rng), coef(rng), coef(rng), coef(rng), 1});
        const int k = std::abs(coef(rng));
        const long double v = r.eval(std::sqrt(static_cast<long double>(k)));
        if (std::abs(v) > 1e-9L) CHECK(sign_at_sqrt(r, k) == (v > 0 ? 1 : -1));
    }
    CHECK(sign_at(q, Rational(1)) == -1);
    CHECK(sign_at(q, Rational(3, 2)) == 1);
}

TEST_CASE("Taylor-shift certificate") {
    const IntPoly z5 = int_poly({2, -3, -1, 1});  // roots 2 and (-1 +- sqrt 5)/2
    CHECK(no_root_at_or_above(z5, Rational(21, 10)));
    CHECK_FALSE(no_root_at_or_above(z5, Rational(2)));
    CHECK_FALSE(no_root_at_or_above(z5, Rational(1)));
    CHECK(no_root_at_or_above(int_poly({1, 1, 1}), Rational(0)));
    // Sufficient only: x^2 + 1 has no real root but the shift by -5 has mixed signs.
    CHECK_FALSE(no_root_at_or_above(int_poly({1, 0, 1}), Rational(-5)));
}
