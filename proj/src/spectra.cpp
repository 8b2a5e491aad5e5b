#include "spex/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace spex {

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix adjacency(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    Matrix a(n, std::vector<double>(n, 0.0));
    for (const Edge& e : g.edges()) {
        a[e.u][e.v] = 1.0;
        a[e.v][e.u] = 1.0;
    }
    return a;
}

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        for (std::size_t q = 0; q < a.size(); ++q) {
            if (p != q) {
                sum += a[p][q] * a[p][q];
            }
        }
    }
    return std::sqrt(sum);
}

void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a[p][q];
    if (apq == 0.0) {
        return;
    }
    const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a[k][p];
        const double akq = a[k][q];
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a[p][k];
        const double aqk = a[q][k];
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v[k][p];
        const double vkq = v[k][q];
        v[k][p] = c * vkp - s * vkq;
        v[k][q] = s * vkp + c * vkq;
    }
}

double max_residual(const Matrix& original, const Matrix& diag, const Matrix& vecs) {
    const std::size_t n = original.size();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double av = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                av += original[i][k] * vecs[k][j];
            }
            const double r = av - diag[j][j] * vecs[i][j];
            sum += r * r;
        }
        worst = std::max(worst, std::sqrt(sum));
    }
    return worst;
}

Spectrum sorted_spectrum(std::vector<double> values, double tol, double norm) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    Spectrum s;
    s.tol = tol;
    s.norm = norm;
    for (std::size_t i : idx) {
        s.values.push_back(values[i]);
    }
    return s;
}

}  // namespace

Spectrum eigenvalues(const Graph& g, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("eigenvalues: tol must be positive");
    }
    const auto n = static_cast<std::size_t>(g.order());
    const Matrix original = adjacency(g);
    Matrix a = original;
    Matrix v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        v[i][i] = 1.0;
    }
    const double norm = std::sqrt(2.0 * g.size());
    const double target = tol * std::max(norm, 1.0);
    for (int sweep = 0; sweep <= kJacobiSweepBudget; ++sweep) {
        if (off_diagonal_norm(a) <= 0.1 * target && max_residual(original, a, v) <= target) {
            std::vector<double> diag(n);
            for (std::size_t i = 0; i < n; ++i) {
                diag[i] = a[i][i];
            }
            return sorted_spectrum(std::move(diag), tol, norm);
        }
        if (sweep == kJacobiSweepBudget) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }
    throw ConvergenceError("eigenvalues: Jacobi did not reach tol " + std::to_string(tol) +
                           " within " + std::to_string(kJacobiSweepBudget) + " sweeps");
}

double spectral_radius(const Graph& g, double tol) {
    if (g.order() == 0) {
        throw std::invalid_argument("spectral_radius: empty vertex set");
    }
    return eigenvalues(g, tol).values.front();
}

Spectrum cycle_spectrum_closed_form(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_spectrum_closed_form: need n >= 3");
    }
    std::vector<double> values;
    for (int k = 0; k < n; ++k) {
        values.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / n));
    }
    return sorted_spectrum(std::move(values), 1e-15, std::sqrt(2.0 * n));
}

CharPoly char_poly(const Graph& g) {
    const int n = g.order();
    if (n > kCharPolyMaxOrder) {
        throw std::invalid_argument("char_poly: order " + std::to_string(n) + " exceeds " +
                                    std::to_string(kCharPolyMaxOrder));
    }
    const auto un = static_cast<std::size_t>(n);
    std::vector<BigInt> c(un + 1, 0);
    c[un] = 1;
    using BigMatrix = std::vector<std::vector<BigInt>>;
    BigMatrix m(un, std::vector<BigInt>(un, 0));
    for (std::size_t i = 0; i < un; ++i) {
        m[i][i] = 1;
    }
    BigMatrix am(un, std::vector<BigInt>(un, 0));
    for (int k = 1; k <= n; ++k) {
        // am = A * m: row i is the sum of rows j over neighbours j of i.
        for (std::size_t i = 0; i < un; ++i) {
            std::fill(am[i].begin(), am[i].end(), BigInt(0));
            for (Graph::Mask nb = g.neighbours(static_cast<int>(i)); nb != 0; nb &= nb - 1) {
                const auto j = static_cast<std::size_t>(std::countr_zero(nb));
                for (std::size_t col = 0; col < un; ++col) {
                    am[i][col] += m[j][col];
                }
            }
        }
        BigInt trace = 0;
        for (std::size_t i = 0; i < un; ++i) {
            trace += am[i][i];
        }
        if (trace % k != 0) {
            throw std::logic_error("char_poly: inexact Faddeev-LeVerrier division");
        }
        const BigInt ck = -trace / k;
        c[un - static_cast<std::size_t>(k)] = ck;
        std::swap(m, am);
        for (std::size_t i = 0; i < un; ++i) {
            m[i][i] += ck;
        }
    }
    return CharPoly(std::move(c));
}

double triangle_count_trace(const Spectrum& s) {
    double sum = 0.0;
    for (double x : s.values) {
        sum += x * x * x;
    }
    return sum / 6.0;
}

double triangle_count_lemma(const Spectrum& s, int m) {
    if (s.values.empty()) {
        return 0.0;
    }
    const double l1 = s.values.front();
    double sum = 0.0;
    for (std::size_t i = 1; i < s.values.size(); ++i) {
        const double li = s.values[i];
        sum += (l1 + li) * li * li;
    }
    return sum / 6.0 + (l1 * l1 - m) * l1 / 3.0;
}

bool verify_interlacing(const Spectrum& host, const Spectrum& sub) {
    const std::size_t n = host.size();
    const std::size_t k = sub.size();
    if (k > n) {
        return false;
    }
    const double slack = 2.0 * (host.slack() + sub.slack());
    for (std::size_t i = 0; i < k; ++i) {
        if (host[n - k + i] > sub[i] + slack || sub[i] > host[i] + slack) {
            return false;
        }
    }
    return true;
}

ClassicalBounds classical_bounds(const Graph& g) {
    const double m = g.size();
    const double n = g.order();
    ClassicalBounds b;
    b.rayleigh_lower = n > 0 ? 2.0 * m / n : 0.0;
    b.sqrt_2m = std::sqrt(2.0 * m);
    b.hong = std::sqrt(std::max(0.0, 2.0 * m - n + 1.0));
    b.sqrt_m = std::sqrt(m);
    return b;
}

std::vector<long double> poly_from_roots(const std::vector<double>& roots) {
    std::vector<long double> c{1.0L};
    for (double r : roots) {
        std::vector<long double> next(c.size() + 1, 0.0L);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= static_cast<long double>(r) * c[i];
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace spex
