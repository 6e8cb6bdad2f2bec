#include "bernlab/powersum.hpp"

#include "bernlab/combinatorics.hpp"
#include "bernlab/umbral.hpp"

#include <stdexcept>
#include <utility>

namespace bernlab {

void validate(const PowerSumPolynomial& poly) {
    const unsigned p = poly.power;
    if (poly_degree(poly.coefficients) != static_cast<int>(p) + 1)
        throw std::domain_error("PowerSumPolynomial: degree must be power + 1");
    if (poly.coefficients[p + 1] != Rational(1, BigInt(p) + 1))
        throw std::domain_error("PowerSumPolynomial: leading coefficient must be 1/(p+1)");
    if (!poly.coefficients.empty() && !poly.coefficients[0].is_zero())
        throw std::domain_error("PowerSumPolynomial: constant term must vanish");
}

namespace {

PowerSumPolynomial finish(unsigned p, Convention conv, Poly coeffs) {
    PowerSumPolynomial poly{p, conv, std::move(coeffs)};
    validate(poly);
    return poly;
}

}  // namespace

PowerSumPolynomial build_closed_form(unsigned p, Convention conv) {
    const IndexedSequence bern(bernoulli_prefix(p + 1, conv));
    // The downgraded (B+n)^{p+1} carries B_{p+1} as its constant term;
    // dropping it keeps exactly the k <= p part of the sum.
    Poly coeffs = bivariate_downgrade(p + 1, bern);
    coeffs.resize(p + 2);
    coeffs[0] = Rational(0);
    const Rational scale(1, BigInt(p) + 1);
    for (auto& c : coeffs) c *= scale;
    return finish(p, conv, std::move(coeffs));
}

PowerSumPolynomial build_pascal(unsigned p, Convention conv) {
    // s[k] holds S_k; each new row solves for S_p from
    // sum_{k<=p} C(p+1,k) S_k = n^{p+1}.
    std::vector<Poly> s(p + 1);
    for (unsigned q = 0; q <= p; ++q) {
        Poly rhs(q + 2);
        rhs[q + 1] = Rational(1);
        for (unsigned k = 0; k < q; ++k)
            rhs = poly_sub(rhs, poly_scale(s[k], Rational(binomial(q + 1, k))));
        s[q] = poly_scale(rhs, Rational(1, BigInt(q) + 1));
    }
    Poly result = std::move(s[p]);
    if (conv == Convention::Plus && p > 0) {
        // T_p - S_p = n^p - 0^p, so p = 0 needs no bridge term.
        Poly npow(p + 1);
        npow[p] = Rational(1);
        result = poly_add(result, npow);
    }
    return finish(p, conv, std::move(result));
}

PowerSumPolynomial build_prouhet(unsigned p, Convention conv,
                                 std::vector<Rational>* fitted) {
    if (fitted) fitted->assign(1, Rational(1));
    Poly current{Rational(0), Rational(1)};  // S_0(n) = T_0(n) = n
    for (unsigned q = 1; q <= p; ++q) {
        Poly next = poly_antiderivative(poly_scale(current, Rational(static_cast<int>(q))));
        next.resize(std::max<std::size_t>(next.size(), 2));
        const Rational at_one = poly_eval(next, Rational(1));
        const Rational c =
            conv == Convention::Minus ? -at_one : Rational(1) - at_one;
        next[1] += c;
        if (fitted) fitted->push_back(c);
        current = std::move(next);
    }
    return finish(p, conv, std::move(current));
}

PowerSumPolynomial build_integral_form(unsigned p) {
    const IndexedSequence bern(bernoulli_prefix(p, Convention::Minus));
    const Poly bernoulli_poly = bivariate_downgrade(p, bern);
    Poly coeffs = poly_antiderivative(bernoulli_poly);
    coeffs.resize(p + 2);
    return finish(p, Convention::Minus, std::move(coeffs));
}

PowerSumPolynomial build(unsigned p, Convention conv, BuildMethod method) {
    switch (method) {
        case BuildMethod::ClosedForm: return build_closed_form(p, conv);
        case BuildMethod::PascalSystem: return build_pascal(p, conv);
        case BuildMethod::ProuhetIntegrate: return build_prouhet(p, conv);
    }
    throw std::logic_error("build: unreachable method tag");
}

Rational evaluate(const PowerSumPolynomial& poly, const BigInt& n) {
    return poly_eval(poly.coefficients, Rational(n));
}

Rational brute_force_sum(unsigned p, unsigned n, Convention conv) {
    BigInt acc = 0;
    if (conv == Convention::Minus) {
        for (unsigned k = 0; k < n; ++k) acc += int_pow(BigInt(k), p);
    } else {
        for (unsigned k = 1; k <= n; ++k) acc += int_pow(BigInt(k), p);
    }
    return Rational(std::move(acc));
}

ParityReport parity_decompose(const PowerSumPolynomial& poly) {
    if (poly.power == 0)
        throw std::invalid_argument("parity_decompose: p must be positive");
    if (poly.convention != Convention::Minus)
        throw std::invalid_argument("parity_decompose: Minus convention only");
    ParityReport report;
    report.power = poly.power;
    report.parity = (poly.power + 1) % 2;
    report.folded = poly.coefficients;
    report.folded.resize(std::max<std::size_t>(report.folded.size(), poly.power + 1));
    report.folded[poly.power] += Rational(1, 2);
    poly_trim(report.folded);
    for (std::size_t i = 0; i < report.folded.size(); ++i)
        if (!report.folded[i].is_zero() && i % 2 != report.parity)
            report.violations.push_back(static_cast<unsigned>(i));
    report.passed = report.violations.empty();
    return report;
}

std::string to_string(const PowerSumPolynomial& poly) {
    return poly_str(poly.coefficients, "n");
}

}  // namespace bernlab
