#include "spex/poly.hpp"

#include <sstream>

namespace spex {

IntPoly int_poly(std::initializer_list<long long> ascending) {
    std::vector<BigInt> c;
    for (long long x : ascending) {
        c.emplace_back(x);
    }
    return IntPoly(std::move(c));
}

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    for (const BigInt& x : p.coefficients()) {
        c.emplace_back(x);
    }
    return RatPoly(std::move(c));
}

namespace {

template <class T>
int sign_of(const T& x) {
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

template <class Coeff>
std::string render(const Polynomial<Coeff>& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Coeff c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = c == 1;
        if (!unit || i == 0) {
            out << c;
        }
        if (i >= 1) {
            out << "x";
        }
        if (i >= 2) {
            out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace

int sign_at_sqrt(const IntPoly& p, const BigInt& k) {
    if (k < 0) {
        throw std::domain_error("sign_at_sqrt: negative radicand");
    }
    // p(sqrt k) = even + odd * sqrt k with integer even/odd parts.
    BigInt even = 0;
    BigInt odd = 0;
    BigInt power = 1;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); i += 2) {
        even += c[i] * power;
        if (i + 1 < c.size()) {
            odd += c[i + 1] * power;
        }
        power *= k;
    }
    const int se = sign_of(even);
    const int so = k == 0 ? 0 : sign_of(odd);
    if (so == 0) {
        return se;
    }
    if (se == 0 || se == so) {
        return so;
    }
    const BigInt lhs = even * even;
    const BigInt rhs = k * odd * odd;
    if (lhs == rhs) {
        return 0;
    }
    return lhs > rhs ? se : so;
}

int sign_at(const IntPoly& p, const Rational& q) { return sign_of(to_rational(p).eval_exact(q)); }

bool no_root_at_or_above(const IntPoly& p, const Rational& h) {
    // Taylor shift by repeated synthetic division.
    std::vector<Rational> c = to_rational(p).coefficients();
    if (c.empty()) {
        return false;
    }
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) {
            c[j - 1] += h * c[j];
        }
    }
    const int lead = sign_of(c.back());
    if (sign_of(c.front()) != lead) {
        return false;
    }
    for (const Rational& x : c) {
        if (sign_of(x) == -lead) {
            return false;
        }
    }
    return true;
}

std::string to_string(const IntPoly& p) { return render(p); }
std::string to_string(const RatPoly& p) { return render(p); }

}  // namespace spex
