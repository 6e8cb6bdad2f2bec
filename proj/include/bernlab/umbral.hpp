#pragma once

#include "bernlab/polynomial.hpp"
#include "bernlab/rational.hpp"

#include <string>
#include <vector>

namespace bernlab {

/// Polynomial in one umbral symbol, coefficient of symbol^k at index
/// k. Trailing zero coefficients are trimmed; the zero polynomial has
/// an empty coefficient list. Downgrading (symbol^k -> seq[k]) happens
/// only after full expansion, which is the whole point of the
/// notation: it does not commute with multiplication.
class UmbralPolynomial {
public:
    UmbralPolynomial() = default;
    explicit UmbralPolynomial(Poly coefficients);

    const Poly& coefficients() const { return coeffs_; }
    int degree() const { return poly_degree(coeffs_); }

    /// Text form "c0 + c1*A + c2*A^2 + ..." with canonical rational
    /// coefficients; the zero polynomial prints "0".
    std::string str() const;

private:
    Poly coeffs_;
};

/// Sequence a_0, a_1, ... serving as the downgrade target of the
/// symbol's powers. Must supply at least a_0.
class IndexedSequence {
public:
    explicit IndexedSequence(std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t k) const { return values_[k]; }

private:
    std::vector<Rational> values_;
};

/// (A + x)^n expanded in powers of the symbol: coefficient of
/// symbol^k is C(n,k) x^{n-k}.
UmbralPolynomial shift_power(const Rational& x, unsigned n);

/// Sum of coeff_k * seq[k]; rejects sequences shorter than
/// degree(p) + 1.
Rational downgrade(const UmbralPolynomial& p, const IndexedSequence& seq);

/// binom(A + shift, p) = (A+shift)(A+shift-1)...(A+shift-p+1)/p!
/// expanded in powers of the symbol; p = 0 gives the constant 1.
UmbralPolynomial falling_binomial(const Rational& shift, unsigned p);

UmbralPolynomial poly_multiply(const UmbralPolynomial& a, const UmbralPolynomial& b);

/// Expands (A + n)^m with n symbolic, downgrades A against seq, and
/// returns the resulting polynomial in n: coefficient of n^{m-k} is
/// C(m,k) seq[k].
Poly bivariate_downgrade(unsigned m, const IndexedSequence& seq);

}  // namespace bernlab
