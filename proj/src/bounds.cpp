#include "spex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "spex/canonical.hpp"
#include "spex/constructions.hpp"
#include "spex/spectra.hpp"

namespace spex {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

IntPoly x_power(std::size_t k) { return IntPoly::monomial(BigInt(1), k); }

int lead_sign(const IntPoly& p) { return p.leading() > 0 ? 1 : -1; }

RootBracket bisect(const IntPoly& p, long double lo, long double hi) {
    RootBracket r{lo, hi, false, 0};
    const int s = lead_sign(p);
    while (r.width() > kRootWidth * std::max(1.0L, std::abs(r.hi)) && r.iterations < 200) {
        const long double mid = (r.lo + r.hi) / 2;
        if (mid <= r.lo || mid >= r.hi) {
            break;
        }
        if (s * p.eval(mid) >= 0) {
            r.hi = mid;
        } else {
            r.lo = mid;
        }
        ++r.iterations;
    }
    return r;
}

}  // namespace

IntPoly z_poly(int m) {
    require(m >= 3, "z_poly: need m >= 3");
    return int_poly({m - 3, -(m - 2), -1, 1});
}

IntPoly h_poly(int m) {
    require(m >= 3, "h_poly: need m >= 3");
    return int_poly({-m + 3, 2 * m - 5, 0, -m, 0, 1});
}

IntPoly l_poly(int m) {
    require(m >= 7, "l_poly: need m >= 7");
    return int_poly({-m + 5, -(3 * m - 14), 0, 4 * m - 14, 0, -m, 0, 1});
}

RatPoly f_poly(int a, int m) {
    require(a >= 1 && m >= 3, "f_poly: need a >= 1, m >= 3");
    const Rational q = Rational(m - 1) / a;
    return RatPoly({Rational(-2 * m + 2 * a) + 2 * q, Rational(3 * m - 2 - 2 * a) - 2 * q,
                    Rational(0), Rational(-m), Rational(0), Rational(1)});
}

IntPoly q_poly(int a, int b) {
    require(a >= 2 && b >= 2, "q_poly: need a, b >= 2");
    const long long ab = 1LL * a * b;
    return int_poly({-2 * ab + 2 * a + 2 * b - 2, -5 * ab + 4 * a + 4 * b - 3, 0,
                     5 * ab - 2 * a - 2 * b + 2, 0, -(ab + 3), 0, 1});
}

IntPoly sk_poly(int a, int b) {
    require(a >= 2 && b >= 2, "sk_poly: need a, b >= 2");
    const long long ab = 1LL * a * b;
    return int_poly({-2 * ab + 2 * a + 2 * b - 2, 3 * ab - 2 * a - 2 * b + 1, 0, -(ab + 1), 0, 1});
}

std::string pendant_site_name(PendantSite site) {
    switch (site) {
        case PendantSite::EndA: return "end-A";
        case PendantSite::P1: return "path-1";
        case PendantSite::P2: return "path-2";
        case PendantSite::P3: return "path-3";
        case PendantSite::EndB: return "end-B";
        case PendantSite::RestA: return "rest-A";
        case PendantSite::RestB: return "rest-B";
    }
    throw std::invalid_argument("unknown pendant site");
}

int pendant_site_vertex(int a, int b, PendantSite site) {
    require(a >= 2 && b >= 2, "pendant site: need a, b >= 2");
    switch (site) {
        case PendantSite::EndA: return 0;
        case PendantSite::P1: return a + b;
        case PendantSite::P2: return a + b + 1;
        case PendantSite::P3: return a + b + 2;
        case PendantSite::EndB: return a;
        case PendantSite::RestA: return 1;
        case PendantSite::RestB: return a + 1;
    }
    throw std::invalid_argument("unknown pendant site");
}

Graph s3_with_pendant(int a, int b, PendantSite site) {
    const Graph base = s_odd(a, b, 2);
    const int n = base.order();
    return base.with_vertices(1).with_edge(pendant_site_vertex(a, b, site), n);
}

IntPoly e_poly(int a, int b) {
    require(a >= 2 && b >= 2, "e_poly: need a, b >= 2");
    const long long ab = 1LL * a * b;
    return int_poly({ab - a - b + 1, -(2 * ab - 2 * a - 2 * b + 2), -(8 * ab - 5 * a - 7 * b + 5), 0,
                     6 * ab - 2 * a - 3 * b + 5, 0, -(ab + 4), 0, 1});
}

IntPoly e_poly(int a, int b, PendantSite site) {
    const CharPoly full = char_poly(s3_with_pendant(a, b, site));
    // Strip up to x^(a+b-4); the rest sites keep fewer zero eigenvalues.
    const auto k = std::min(full.x_valuation(), static_cast<std::size_t>(a + b - 4));
    return full.shifted_down(k);
}

RootBracket bisect_sqrt_bracket(const IntPoly& p, const BigInt& lo_sq, const BigInt& hi_sq) {
    const int s = lead_sign(p);
    if (s * sign_at_sqrt(p, lo_sq) >= 0) {
        throw std::logic_error("root bracket: no sign change at lower end");
    }
    const int at_hi = s * sign_at_sqrt(p, hi_sq);
    if (at_hi < 0) {
        throw std::logic_error("root bracket: no sign change at upper end");
    }
    const long double lo = std::sqrt(static_cast<long double>(lo_sq));
    const long double hi = std::sqrt(static_cast<long double>(hi_sq));
    if (at_hi == 0) {
        return RootBracket{lo, hi, true, 0};
    }
    return bisect(p, lo, hi);
}

RootBracket certify_largest_root(const IntPoly& p, const Rational& lo, const Rational& hi) {
    const int s = lead_sign(p);
    if (s * sign_at(p, lo) >= 0) {
        throw std::logic_error("certify_largest_root: no sign change at lower end");
    }
    const int at_hi = s * sign_at(p, hi);
    if (at_hi < 0) {
        throw std::logic_error("certify_largest_root: no sign change at upper end");
    }
    const auto lo_ld = static_cast<long double>(lo);
    const auto hi_ld = static_cast<long double>(hi);
    if (at_hi == 0) {
        // hi is a root; it is the largest when nothing lies strictly above.
        if (!no_root_at_or_above(p, hi + Rational(1, 1'000'000'000'000LL))) {
            throw std::logic_error("certify_largest_root: cannot exclude roots above hi");
        }
        return RootBracket{lo_ld, hi_ld, true, 0};
    }
    if (!no_root_at_or_above(p, hi)) {
        throw std::logic_error("certify_largest_root: cannot exclude roots above hi");
    }
    return bisect(p, lo_ld, hi_ld);
}

RootBracket beta_bracket(int m) {
    require(m >= 5, "beta: need m >= 5");
    if (m == 5) {
        // sqrt(m-2) < beta < sqrt(m-1) needs m >= 6; Z(1) = -1 < 0 = Z(2) here.
        return bisect_sqrt_bracket(z_poly(m), 1, 4);
    }
    return bisect_sqrt_bracket(z_poly(m), m - 2, m - 1);
}

RootBracket gamma_bracket(int m) {
    require(m >= 7, "gamma: need m >= 7");
    return bisect_sqrt_bracket(l_poly(m), m - 4, m - 3);
}

double beta(int m) { return static_cast<double>(beta_bracket(m).midpoint()); }

double gamma(int m) { return static_cast<double>(gamma_bracket(m).midpoint()); }

double f_val(int m, double x) {
    require(m >= 2, "f_val: need m >= 2");
    return (std::sqrt(m - 2.0) + x) * x * x;
}

double g_val(int m, double x) {
    require(m >= 4, "g_val: need m >= 4");
    return (std::sqrt(m - 4.0) + x) * x * x;
}

double f_min_on_interval(int m, double a, double b) {
    require(a <= b, "f_min_on_interval: need a <= b");
    require(b <= 0.0, "f_min_on_interval: need b <= 0");
    return std::min(f_val(m, a), f_val(m, b));
}

RatPoly identity_h_minus_f(int a, int m) {
    require(a >= 2, "identity_h_minus_f: need a >= 2");
    const RatPoly diff = to_rational(h_poly(m)) - f_poly(a, m);
    const Rational k = Rational(2 * a) + Rational(2 * (m - 1), a) - m - 3;
    const RatPoly expected = RatPoly({-k, k});
    if (!(diff == expected)) {
        throw std::logic_error("H - F differs from (2a + 2(m-1)/a - m - 3)(x - 1)");
    }
    return diff;
}

IntPoly e_minus_xl(int a, int b) {
    const int m = a * b + 4;
    return e_poly(a, b) - x_power(1) * l_poly(m);
}

IntPoly e_residual_displayed(int a, int b) {
    const long long A = a;
    const long long B = b;
    return int_poly({A * B - A - B + 1, -(A * B - 2 * A - 2 * B + 3), -(5 * A - 7) * (B - 1), 0,
                     (2 * A - 3) * (B - 1)});
}

bool charpoly_identity_sk(int a, int b) {
    return char_poly(sk(a, b)) == x_power(static_cast<std::size_t>(a + b - 4)) * sk_poly(a, b);
}

bool charpoly_identity_sk2(int m) {
    require(m >= 5 && m % 2 == 1, "charpoly_identity_sk2: need odd m >= 5");
    const IntPoly expected = x_power(static_cast<std::size_t>((m - 5) / 2)) * int_poly({-1, 1, 1}) * z_poly(m);
    return char_poly(sk(2, (m - 1) / 2)) == expected;
}

bool charpoly_identity_s3(int m) {
    require(m >= 7 && m % 2 == 1, "charpoly_identity_s3: need odd m >= 7");
    const IntPoly expected = x_power(static_cast<std::size_t>((m - 7) / 2)) * l_poly(m);
    return char_poly(s_odd(2, (m - 3) / 2, 2)) == expected;
}

bool charpoly_identity_q(int a, int b) {
    return char_poly(s_odd(a, b, 2)) == x_power(static_cast<std::size_t>(a + b - 4)) * q_poly(a, b);
}

Lemma42Report lemma42_check(int a, int b) {
    require(a >= 2 && b >= 2, "lemma42_check: need a, b >= 2");
    Lemma42Report r;
    r.a = a;
    r.b = b;
    r.m = a * b + 4;
    r.gamma = gamma(r.m);
    r.all_below = true;
    std::set<std::string> distinct;
    for (int c = 1; c <= kPendantCases; ++c) {
        const auto site = static_cast<PendantSite>(c);
        const Graph g = s3_with_pendant(a, b, site);
        PendantCase pc{site, canonical_form(g), spectral_radius(g), 0.0};
        pc.margin = r.gamma - pc.lambda;
        r.all_below = r.all_below && pc.margin > 0;
        distinct.insert(pc.canonical);
        r.cases.push_back(std::move(pc));
    }
    r.distinct_graphs = static_cast<int>(distinct.size());
    r.displayed_matches_e = e_poly(a, b, kDisplayedPendantSite) == e_poly(a, b);
    return r;
}

}  // namespace spex
