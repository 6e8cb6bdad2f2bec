#include "bernlab/umbral.hpp"

#include "bernlab/combinatorics.hpp"

#include <stdexcept>
#include <utility>

namespace bernlab {

UmbralPolynomial::UmbralPolynomial(Poly coefficients) : coeffs_(std::move(coefficients)) {
    poly_trim(coeffs_);
}

std::string UmbralPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out = coeffs_[0].str();
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out += " + ";
        out += coeffs_[k].str();
        out += "*A";
        if (k > 1) {
            out += '^';
            out += std::to_string(k);
        }
    }
    return out;
}

IndexedSequence::IndexedSequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("IndexedSequence: element 0 is required");
}

UmbralPolynomial shift_power(const Rational& x, unsigned n) {
    Poly coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        coeffs[k] = Rational(binomial(n, k)) * pow(x, n - k);
    return UmbralPolynomial(std::move(coeffs));
}

Rational downgrade(const UmbralPolynomial& p, const IndexedSequence& seq) {
    const Poly& c = p.coefficients();
    if (c.size() > seq.size())
        throw std::invalid_argument("downgrade: sequence shorter than the polynomial degree");
    Rational acc;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) acc += c[k] * seq[k];
    }
    return acc;
}

UmbralPolynomial falling_binomial(const Rational& shift, unsigned p) {
    Poly prod{Rational(1)};
    for (unsigned i = 0; i < p; ++i) {
        const Poly factor{shift - Rational(static_cast<int>(i)), Rational(1)};
        prod = poly_mul(prod, factor);
    }
    const Rational inv_fact = Rational(1, factorial(p));
    for (auto& c : prod) c *= inv_fact;
    return UmbralPolynomial(std::move(prod));
}

UmbralPolynomial poly_multiply(const UmbralPolynomial& a, const UmbralPolynomial& b) {
    return UmbralPolynomial(poly_mul(a.coefficients(), b.coefficients()));
}

Poly bivariate_downgrade(unsigned m, const IndexedSequence& seq) {
    if (seq.size() < m + 1)
        throw std::invalid_argument("bivariate_downgrade: sequence shorter than m + 1");
    Poly in_n(m + 1);
    for (unsigned k = 0; k <= m; ++k)
        in_n[m - k] = Rational(binomial(m, k)) * seq[k];
    poly_trim(in_n);
    return in_n;
}

}  // namespace bernlab
