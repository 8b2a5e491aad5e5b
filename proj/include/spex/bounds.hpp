#pragma once

#include <string>
#include <vector>

#include "spex/graph.hpp"
#include "spex/poly.hpp"

namespace spex {

// Z(x) = x^3 - x^2 - (m-2)x + m - 3; beta(m) is its largest root.
IntPoly z_poly(int m);
// H(x) = (x^2 + x - 1) Z(x) = x^5 - m x^3 + (2m-5)x - m + 3.
IntPoly h_poly(int m);
// L(x) = x^7 - m x^5 + (4m-14)x^3 - (3m-14)x - m + 5; gamma(m) is its largest root.
IntPoly l_poly(int m);
// F(x) = x^5 - m x^3 + (3m - 2 - 2a - 2(m-1)/a)x - 2m + 2a + 2(m-1)/a.
RatPoly f_poly(int a, int m);
// Reduced characteristic polynomial of S_3(K_{a,b}).
IntPoly q_poly(int a, int b);
// K_{a,b} with one subdivided edge: x^5 - (ab+1)x^3 + (3ab-2a-2b+1)x - 2ab + 2a + 2b - 2.
IntPoly sk_poly(int a, int b);

// Pendant-attachment sites on S_3(K_{a,b}) (parts A = 0..a-1, B = a..a+b-1,
// subdivided edge 0 - p1 - p2 - p3 - a). One representative per role.
enum class PendantSite { EndA = 1, P1, P2, P3, EndB, RestA, RestB };
inline constexpr int kPendantCases = 7;
std::string pendant_site_name(PendantSite site);
int pendant_site_vertex(int a, int b, PendantSite site);
Graph s3_with_pendant(int a, int b, PendantSite site);

// The pendant case whose reduced polynomial is E(x): pendant on the A-end of the path.
inline constexpr PendantSite kDisplayedPendantSite = PendantSite::EndA;
// E(x) as displayed for the drawn case.
IntPoly e_poly(int a, int b);
// Reduced characteristic polynomial of any of the seven cases; for the
// displayed site this equals e_poly(a, b).
IntPoly e_poly(int a, int b, PendantSite site);

// Enclosure of a largest real root. closed_hi marks hi itself as a root.
struct RootBracket {
    long double lo = 0;
    long double hi = 0;
    bool closed_hi = false;
    int iterations = 0;

    long double midpoint() const { return closed_hi ? hi : (lo + hi) / 2; }
    long double width() const { return hi - lo; }
};

inline constexpr long double kRootWidth = 1e-15L;

// Bisection between sqrt(lo_sq) and sqrt(hi_sq). Endpoint signs are checked
// exactly; requires p(sqrt lo_sq) < 0 <= p(sqrt hi_sq) for positive leading
// coefficient. The caller vouches that no larger root exists.
RootBracket bisect_sqrt_bracket(const IntPoly& p, const BigInt& lo_sq, const BigInt& hi_sq);
// Rational endpoints, with the absence of roots >= hi certified by Taylor shift.
RootBracket certify_largest_root(const IntPoly& p, const Rational& lo, const Rational& hi);

RootBracket beta_bracket(int m);
RootBracket gamma_bracket(int m);
double beta(int m);
double gamma(int m);

double f_val(int m, double x);
double g_val(int m, double x);
// Minimum of f over [a, b] with a <= b <= 0.
double f_min_on_interval(int m, double a, double b);

// H - F, checked against (2a + 2(m-1)/a - m - 3)(x - 1).
RatPoly identity_h_minus_f(int a, int m);
// E - xL for m = ab + 4, and the displayed residual.
IntPoly e_minus_xl(int a, int b);
IntPoly e_residual_displayed(int a, int b);

bool charpoly_identity_sk(int a, int b);
bool charpoly_identity_sk2(int m);
bool charpoly_identity_s3(int m);
bool charpoly_identity_q(int a, int b);

struct PendantCase {
    PendantSite site;
    std::string canonical;
    double lambda = 0;
    double margin = 0;  // gamma(m) - lambda
};

struct Lemma42Report {
    int a = 0;
    int b = 0;
    int m = 0;
    double gamma = 0;
    std::vector<PendantCase> cases;
    int distinct_graphs = 0;
    bool displayed_matches_e = false;
    bool all_below = false;
};

Lemma42Report lemma42_check(int a, int b);

}  // namespace spex
