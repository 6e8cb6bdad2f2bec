#pragma once

#include "bernlab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bernlab {

/// Dense univariate polynomial, coefficient of x^i at index i.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Degree of p, or -1 for the zero polynomial.
inline int poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (!p[i - 1].is_zero()) return static_cast<int>(i - 1);
    return -1;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc;
    for (std::size_t i = p.size(); i > 0; --i) {
        acc *= x;
        acc += p[i - 1];
    }
    return acc;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    poly_trim(r);
    return r;
}

inline Poly poly_scale(const Poly& p, const Rational& c) {
    Poly r = p;
    for (auto& coeff : r) coeff *= c;
    poly_trim(r);
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

/// Formal derivative.
inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<int>(i));
    poly_trim(r);
    return r;
}

/// Antiderivative with zero constant term.
inline Poly poly_antiderivative(const Poly& p) {
    Poly r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i + 1] = p[i] / Rational(static_cast<int>(i) + 1);
    poly_trim(r);
    return r;
}

/// Substitutes x -> x + a.
inline Poly poly_shift_var(const Poly& p, const Rational& a) {
    Poly result;
    Poly shifted{a, Rational(1)};
    Poly power{Rational(1)};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_zero()) result = poly_add(result, poly_scale(power, p[i]));
        if (i + 1 < p.size()) power = poly_mul(power, shifted);
    }
    return result;
}

/// Exact division; quotient is written to q. Returns true iff the
/// remainder is identically zero (q is meaningless otherwise).
inline bool poly_divide_exact(const Poly& dividend, const Poly& divisor, Poly& q) {
    Poly d = divisor;
    poly_trim(d);
    if (d.empty()) throw std::domain_error("poly_divide_exact: zero divisor");
    Poly rem = dividend;
    poly_trim(rem);
    q.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, Rational());
    while (rem.size() >= d.size()) {
        const Rational factor = rem.back() / d.back();
        const std::size_t offset = rem.size() - d.size();
        q[offset] = factor;
        for (std::size_t i = 0; i < d.size(); ++i) rem[offset + i] -= d[i] * factor;
        poly_trim(rem);
    }
    return rem.empty();
}

/// Human-readable form in a named variable, highest power first,
/// e.g. "n^4/4 - n^3/2 + n^2/4".
std::string poly_str(const Poly& p, const std::string& var = "n");

}  // namespace bernlab
