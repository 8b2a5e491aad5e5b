#pragma once

#include <stdexcept>
#include <vector>

#include "spex/graph.hpp"
#include "spex/poly.hpp"

namespace spex {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kJacobiSweepBudget = 100;
inline constexpr int kCharPolyMaxOrder = 40;

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adjacency eigenvalues in descending order. Every computed eigenpair has
// residual ||Av - lambda v|| <= tol * norm, norm = ||A||_F = sqrt(2m).
struct Spectrum {
    std::vector<double> values;
    double tol = kDefaultTol;
    double norm = 0.0;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    // Absolute per-eigenvalue error bound.
    double slack() const { return tol * (norm > 1.0 ? norm : 1.0); }
};

// Cyclic Jacobi on the dense adjacency matrix.
Spectrum eigenvalues(const Graph& g, double tol = kDefaultTol);
double spectral_radius(const Graph& g, double tol = kDefaultTol);
Spectrum cycle_spectrum_closed_form(int n);

// det(xI - A) by Faddeev-LeVerrier over exact integers.
using CharPoly = IntPoly;
CharPoly char_poly(const Graph& g);

// (1/6) sum lambda_i^3.
double triangle_count_trace(const Spectrum& s);
// (1/6) sum_{i>=2} (lambda_1 + lambda_i) lambda_i^2 + (1/3)(lambda_1^2 - m) lambda_1.
double triangle_count_lemma(const Spectrum& s, int m);

// lambda_{n-k+i}(host) <= lambda_i(sub) <= lambda_i(host) for all i, with
// 2x the combined eigenvalue slack.
bool verify_interlacing(const Spectrum& host, const Spectrum& sub);

struct ClassicalBounds {
    double rayleigh_lower = 0.0;  // 2m/n
    double sqrt_2m = 0.0;
    double hong = 0.0;            // sqrt(2m - n + 1), meaningful without isolated vertices
    double sqrt_m = 0.0;
};
ClassicalBounds classical_bounds(const Graph& g);

// Coefficients of prod (x - lambda_i), ascending, for comparison against an
// exact characteristic polynomial.
std::vector<long double> poly_from_roots(const std::vector<double>& roots);

}  // namespace spex
