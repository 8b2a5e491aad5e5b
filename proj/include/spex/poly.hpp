#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace spex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial, coefficients in ascending powers, no
// trailing zeros (the zero polynomial has no coefficients).
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> ascending) : c_(std::move(ascending)) { trim(); }
    Polynomial(std::initializer_list<Coeff> ascending) : c_(ascending) { trim(); }

    static Polynomial monomial(const Coeff& coeff, std::size_t power) {
        std::vector<Coeff> c(power + 1, Coeff(0));
        c[power] = coeff;
        return Polynomial(std::move(c));
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Coeff>& coefficients() const { return c_; }
    Coeff coeff(std::size_t power) const { return power < c_.size() ? c_[power] : Coeff(0); }
    Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), Coeff(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<Coeff> r = c_;
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Coeff> r(c_.size() + o.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial scaled(const Coeff& k) const { return *this * Polynomial({k}); }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Largest k with x^k dividing this polynomial.
    std::size_t x_valuation() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        return k;
    }
    Polynomial shifted_down(std::size_t k) const {
        std::vector<Coeff> r;
        for (std::size_t i = k; i < c_.size(); ++i) r.push_back(c_[i]);
        for (std::size_t i = 0; i < k && i < c_.size(); ++i)
            if (c_[i] != 0) throw std::domain_error("shifted_down: x^k does not divide");
        return Polynomial(std::move(r));
    }
    Polynomial derivative() const {
        std::vector<Coeff> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Coeff(static_cast<long long>(i)));
        return Polynomial(std::move(r));
    }

    template <class Real>
    Real eval(Real x) const {
        Real acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + static_cast<Real>(c_[i]);
        return acc;
    }
    Coeff eval_exact(const Coeff& x) const {
        Coeff acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Coeff> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

IntPoly int_poly(std::initializer_list<long long> ascending);
RatPoly to_rational(const IntPoly& p);

// Exact sign of p(sqrt(k)) for integer k >= 0.
int sign_at_sqrt(const IntPoly& p, const BigInt& k);
// Exact sign of p(q) for rational q.
int sign_at(const IntPoly& p, const Rational& q);
// True when p(x + h) has a nonzero constant term and no coefficient of the
// opposite sign to its leading one, which rules out any real root >= h.
bool no_root_at_or_above(const IntPoly& p, const Rational& h);

// Descending-power rendering such as "x^3 - x^2 - 3x + 2".
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);

}  // namespace spex
