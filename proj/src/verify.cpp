#include "bernlab/verify.hpp"

#include "bernlab/bernoulli.hpp"
#include "bernlab/combinatorics.hpp"
#include "bernlab/polynomial.hpp"
#include "bernlab/powersum.hpp"
#include "bernlab/umbral.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace bernlab {

std::optional<Mismatch> first_difference(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
    const std::size_t shared = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < shared; ++i)
        if (!(a[i] == b[i])) return Mismatch{i, a[i], b[i]};
    return std::nullopt;
}

namespace {

struct Checker {
    SuiteResult result;

    explicit Checker(std::string name) { result.suite = std::move(name); }

    void expect(bool ok, const std::string& context) {
        ++result.checks;
        if (!ok && result.passed) {
            result.passed = false;
            result.failure = context;
        }
    }

    void expect_eq(const Rational& lhs, const Rational& rhs, const std::string& context) {
        expect(lhs == rhs, context + ": " + lhs.str() + " != " + rhs.str());
    }

    void expect_poly_eq(const Poly& lhs, const Poly& rhs, const std::string& context) {
        Poly l = lhs, r = rhs;
        poly_trim(l);
        poly_trim(r);
        if (l.size() != r.size()) {
            expect(false, context + ": degrees differ");
            return;
        }
        if (auto diff = first_difference(l, r)) {
            expect(false, context + ": first difference at index " +
                              std::to_string(diff->index) + ": " + diff->lhs.str() +
                              " != " + diff->rhs.str());
            return;
        }
        expect(true, context);
    }

    void compare_prefix(const std::vector<Rational>& reference,
                        const std::vector<Rational>& candidate,
                        const std::string& context) {
        const std::size_t shared = std::min(reference.size(), candidate.size());
        result.checks += shared;
        if (const auto diff = first_difference(reference, candidate);
            diff && result.passed) {
            result.passed = false;
            result.failure = context + " first differing index " +
                             std::to_string(diff->index) + ": " + diff->lhs.str() +
                             " != " + diff->rhs.str();
        }
    }
};

/// x -> a + b*x substituted into p.
Poly poly_affine(const Poly& p, const Rational& a, const Rational& b) {
    Poly result;
    const Poly line{a, b};
    Poly power{Rational(1)};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_zero()) result = poly_add(result, poly_scale(power, p[i]));
        if (i + 1 < p.size()) power = poly_mul(power, line);
    }
    return result;
}

SuiteResult suite_generator_agreement(unsigned upto) {
    Checker ck("generators/agreement");
    const auto reference = gen_de_moivre(upto, Convention::Minus).values;

    ck.compare_prefix(reference, gen_euler_convolution(upto).values,
                      "de-moivre vs euler-conv:");
    ck.compare_prefix(reference, gen_genocchi(upto).values, "de-moivre vs genocchi:");
    ck.compare_prefix(reference, gen_blissard_difference(upto).values,
                      "de-moivre vs blissard-diff:");
    ck.compare_prefix(reference, gen_egf_reciprocal(upto, Convention::Minus).values,
                      "de-moivre vs egf:");
    ck.compare_prefix(reference, gen_matrix_inverse(std::min(upto, 20u)).values,
                      "de-moivre vs matrix-inv:");
    ck.compare_prefix(reference,
                      gen_determinant(std::min(upto, 16u), DeterminantVariant::Hammond).values,
                      "de-moivre vs det-hammond:");
    ck.compare_prefix(
        reference, gen_determinant(std::min(upto, 16u), DeterminantVariant::Factorial).values,
        "de-moivre vs det-factorial:");

    if (upto >= 2) {
        const auto even = gen_de_moivre_even(upto / 2);
        for (std::size_t m = 1; m <= even.size(); ++m)
            ck.expect_eq(even[m - 1], reference[2 * m],
                         "de-moivre vs de-moivre-even at index " + std::to_string(2 * m));
    }

    const auto plus = gen_de_moivre(upto, Convention::Plus).values;
    ck.compare_prefix(plus, convert_convention(gen_de_moivre(upto, Convention::Minus)).values,
                      "de-moivre plus vs converted minus:");
    ck.compare_prefix(plus, gen_egf_reciprocal(upto, Convention::Plus).values,
                      "de-moivre plus vs egf plus:");
    return ck.result;
}

SuiteResult suite_generator_structure(unsigned upto) {
    Checker ck("generators/structure");
    const auto seq = gen_de_moivre(upto, Convention::Minus);
    const auto& b = seq.values;

    ck.expect_eq(b[0], Rational(1), "index 0");
    if (upto >= 1) ck.expect_eq(b[1], Rational(-1, 2), "index 1");
    for (std::size_t k = 3; k < b.size(); k += 2)
        ck.expect(b[k].is_zero(), "odd index " + std::to_string(k) + " is nonzero");
    for (std::size_t k = 2; k < b.size(); k += 2) {
        const int expected = (k / 2) % 2 == 1 ? 1 : -1;
        ck.expect(b[k].sign() == expected,
                  "even index " + std::to_string(k) + " has sign " +
                      std::to_string(b[k].sign()));
    }

    if (upto >= 4) {
        for (unsigned m = 4; m <= 10; ++m)
            ck.expect_eq(genocchi_bernoulli(4, m), b[4],
                         "genocchi m-independence at m=" + std::to_string(m));
    }

    const auto converted = convert_convention(seq);
    const auto roundtrip = convert_convention(converted);
    ck.compare_prefix(b, roundtrip.values, "convention conversion involution:");
    for (std::size_t k = 0; k < b.size(); k += 2)
        ck.expect_eq(converted.values[k], b[k],
                     "conversion fixes even index " + std::to_string(k));
    return ck.result;
}

SuiteResult suite_powersum_methods(unsigned upto) {
    Checker ck("powersum/methods");
    const unsigned pmax = std::min(upto, 20u);
    for (unsigned p = 0; p <= pmax; ++p) {
        for (const Convention conv : {Convention::Minus, Convention::Plus}) {
            const std::string tag =
                "p=" + std::to_string(p) + " " + convention_name(conv);
            const auto closed = build_closed_form(p, conv);
            ck.expect_poly_eq(closed.coefficients, build_pascal(p, conv).coefficients,
                              "closed vs pascal " + tag);
            std::vector<Rational> fitted;
            const auto prouhet = build_prouhet(p, conv, &fitted);
            ck.expect_poly_eq(closed.coefficients, prouhet.coefficients,
                              "closed vs prouhet " + tag);
            const auto bern = bernoulli_prefix(p, conv);
            ck.compare_prefix(bern, fitted, "prouhet fitted coefficients " + tag + ":");
        }
        ck.expect_poly_eq(build_closed_form(p, Convention::Minus).coefficients,
                          build_integral_form(p).coefficients,
                          "closed vs integral p=" + std::to_string(p));
    }
    return ck.result;
}

SuiteResult suite_powersum_oracle() {
    Checker ck("powersum/oracle");
    for (unsigned p = 0; p <= 12; ++p) {
        for (const Convention conv : {Convention::Minus, Convention::Plus}) {
            std::vector<PowerSumPolynomial> polys = {
                build_closed_form(p, conv),
                build_pascal(p, conv),
                build_prouhet(p, conv),
            };
            if (conv == Convention::Minus) polys.push_back(build_integral_form(p));

            Rational running(0);
            for (unsigned n = 0; n <= 200; ++n) {
                if (n > 0) {
                    const unsigned k = conv == Convention::Minus ? n - 1 : n;
                    running += Rational(int_pow(BigInt(k), p));
                }
                for (const auto& poly : polys)
                    ck.expect_eq(evaluate(poly, BigInt(n)), running,
                                 "oracle p=" + std::to_string(p) + " n=" +
                                     std::to_string(n) + " " + convention_name(conv));
            }
        }
    }
    return ck.result;
}

SuiteResult suite_powersum_identities(unsigned upto) {
    Checker ck("powersum/identities");
    const unsigned pmax = std::min(upto, 20u);

    std::vector<PowerSumPolynomial> s(pmax + 1), t(pmax + 1);
    for (unsigned p = 0; p <= pmax; ++p) {
        s[p] = build_closed_form(p, Convention::Minus);
        t[p] = build_closed_form(p, Convention::Plus);
    }
    const auto bern = bernoulli_prefix(pmax, Convention::Minus);

    for (unsigned p = 0; p <= pmax; ++p) {
        const std::string tag = "p=" + std::to_string(p);

        // Pascal system: sum C(p+1,k) S_k = n^{p+1}.
        Poly pascal_sum;
        for (unsigned k = 0; k <= p; ++k)
            pascal_sum = poly_add(pascal_sum,
                                  poly_scale(s[k].coefficients, Rational(binomial(p + 1, k))));
        Poly monomial(p + 2);
        monomial[p + 1] = Rational(1);
        ck.expect_poly_eq(pascal_sum, monomial, "pascal system " + tag);

        // Forward difference: S_p(n+1) - S_p(n) = n^p.
        Poly npow(p + 1);
        npow[p] = Rational(1);
        ck.expect_poly_eq(
            poly_sub(poly_affine(s[p].coefficients, Rational(1), Rational(1)),
                     s[p].coefficients),
            npow, "difference recurrence minus " + tag);

        // Plus analogue: T_p(n+1) - T_p(n) = (n+1)^p.
        ck.expect_poly_eq(
            poly_sub(poly_affine(t[p].coefficients, Rational(1), Rational(1)),
                     t[p].coefficients),
            poly_affine(npow, Rational(1), Rational(1)),
            "difference recurrence plus " + tag);

        // Bridge: T_p - S_p = n^p for p > 0.
        if (p > 0)
            ck.expect_poly_eq(poly_sub(t[p].coefficients, s[p].coefficients), npow,
                              "convention bridge " + tag);

        // Special values at 1, 0, -1.
        ck.expect_eq(poly_eval(s[p].coefficients, Rational(1)),
                     Rational(p == 0 ? 1 : 0), "S(1) " + tag);
        ck.expect_eq(poly_eval(s[p].coefficients, Rational(0)), Rational(0),
                     "S(0) " + tag);
        ck.expect_eq(poly_eval(s[p].coefficients, Rational(-1)),
                     Rational(p % 2 == 0 ? -1 : 1), "S(-1) " + tag);
        ck.expect_eq(poly_eval(t[p].coefficients, Rational(1)), Rational(1),
                     "T(1) " + tag);
        ck.expect_eq(poly_eval(t[p].coefficients, Rational(0)), Rational(0),
                     "T(0) " + tag);
        ck.expect_eq(poly_eval(t[p].coefficients, Rational(-1)),
                     Rational(p == 0 ? -1 : 0), "T(-1) " + tag);

        if (p >= 1) {
            // Derivative: S'_p = p S_{p-1} + B_p.
            Poly expected = poly_scale(s[p - 1].coefficients, Rational(static_cast<int>(p)));
            expected.resize(std::max<std::size_t>(expected.size(), 1));
            expected[0] += bern[p];
            ck.expect_poly_eq(poly_derivative(s[p].coefficients), expected,
                              "derivative identity " + tag);

            // n(n+1) divides T_p.
            Poly quotient;
            ck.expect(poly_divide_exact(t[p].coefficients,
                                        Poly{Rational(0), Rational(1), Rational(1)},
                                        quotient),
                      "divisibility of T by n(n+1) " + tag);

            // Parity of S_p + n^p/2.
            ck.expect(parity_decompose(s[p]).passed, "parity fold " + tag);
        }

        // Reflection of the Bernoulli polynomial: B_p(1-x) = (-1)^p B_p(x).
        const Poly bp = bivariate_downgrade(p, IndexedSequence(bernoulli_prefix(p, Convention::Minus)));
        Poly reflected = poly_affine(bp, Rational(1), Rational(-1));
        const Poly flipped = p % 2 == 0 ? bp : poly_scale(bp, Rational(-1));
        ck.expect_poly_eq(reflected, flipped, "reflection " + tag);

        // Integer arguments produce integers.
        for (int n = -50; n <= 50; ++n) {
            const Rational sv = poly_eval(s[p].coefficients, Rational(n));
            const Rational tv = poly_eval(t[p].coefficients, Rational(n));
            ck.expect(sv.is_integer() && tv.is_integer(),
                      "integrality at n=" + std::to_string(n) + " " + tag);
        }
    }

    // Hockey stick: summing binom(j-1, p) over j = 1..n term by term,
    // via x^k -> T_k(n), yields binom(n, p+1).
    for (unsigned p = 0; p <= std::min(upto, 12u); ++p) {
        const Poly expansion = falling_binomial(Rational(-1), p).coefficients();
        Poly substituted;
        for (std::size_t k = 0; k < expansion.size(); ++k)
            substituted =
                poly_add(substituted, poly_scale(t[k].coefficients, expansion[k]));
        const Poly target = falling_binomial(Rational(0), p + 1).coefficients();
        ck.expect_poly_eq(substituted, target, "hockey stick p=" + std::to_string(p));
    }
    return ck.result;
}

SuiteResult suite_umbral_identities(unsigned upto) {
    Checker ck("umbral/identities");
    // The linearity trials below draw random polynomials of degree up
    // to 8, so the sequence must cover at least that many indices.
    const IndexedSequence minus(bernoulli_prefix(std::max(upto, 8u) + 1, Convention::Minus));
    const IndexedSequence plus(bernoulli_prefix(std::min(upto, 30u) + 1, Convention::Plus));
    const auto& b = minus.values();

    for (unsigned p = 0; p <= upto; ++p) {
        const std::string tag = "p=" + std::to_string(p);
        ck.expect_eq(downgrade(shift_power(Rational(1), p + 1), minus) - b[p + 1],
                     Rational(p == 0 ? 1 : 0), "recurrence form 1 " + tag);
        const Rational rhs = p % 2 == 0 ? b[p] : -b[p];
        ck.expect_eq(downgrade(shift_power(Rational(1), p), minus), rhs,
                     "recurrence form 2 " + tag);
    }

    for (unsigned p = 0; p <= std::min(upto, 30u); ++p) {
        const std::string tag = "p=" + std::to_string(p);
        const Rational alternating(p % 2 == 0 ? 1 : -1, BigInt(p) + 1);
        ck.expect_eq(downgrade(falling_binomial(Rational(0), p), minus), alternating,
                     "binomial at zero shift " + tag);
        if (p >= 1)
            ck.expect_eq(downgrade(falling_binomial(Rational(static_cast<int>(p) - 1), p), minus),
                         Rational(-1, BigInt(p) * (BigInt(p) + 1)),
                         "binomial at shift p-1 " + tag);
        ck.expect_eq(downgrade(falling_binomial(Rational(-1), p), plus), alternating,
                     "plus-convention binomial " + tag);
    }

    // Downgrade is linear over random polynomials.
    std::mt19937 rng(20260819u);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> denom(1, 9);
    std::uniform_int_distribution<int> degree(0, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto random_poly = [&] {
            Poly c(degree(rng) + 1);
            for (auto& v : c) v = Rational(coeff(rng), denom(rng));
            return UmbralPolynomial(std::move(c));
        };
        const UmbralPolynomial p = random_poly();
        const UmbralPolynomial q = random_poly();
        const Rational a(coeff(rng), denom(rng));
        const Rational bb(coeff(rng), denom(rng));
        const UmbralPolynomial combo(
            poly_add(poly_scale(p.coefficients(), a), poly_scale(q.coefficients(), bb)));
        ck.expect_eq(downgrade(combo, minus),
                     a * downgrade(p, minus) + bb * downgrade(q, minus),
                     "downgrade linearity trial " + std::to_string(trial));
    }

    // Derivative consistency of the bivariate expansion.
    for (unsigned m = 1; m <= std::min(upto, 20u); ++m) {
        const IndexedSequence window(bernoulli_prefix(m, Convention::Minus));
        const Poly full = bivariate_downgrade(m, window);
        const IndexedSequence smaller(bernoulli_prefix(m - 1, Convention::Minus));
        const Poly lower = bivariate_downgrade(m - 1, smaller);
        ck.expect_poly_eq(poly_derivative(full),
                          poly_scale(lower, Rational(static_cast<int>(m))),
                          "bivariate derivative m=" + std::to_string(m));
    }
    return ck.result;
}

}  // namespace

std::vector<SuiteResult> run_verify(unsigned upto) {
    std::vector<std::future<SuiteResult>> futures;
    futures.push_back(std::async(std::launch::async, suite_generator_agreement, upto));
    futures.push_back(std::async(std::launch::async, suite_generator_structure, upto));
    futures.push_back(std::async(std::launch::async, suite_powersum_methods, upto));
    futures.push_back(std::async(std::launch::async, suite_powersum_oracle));
    futures.push_back(std::async(std::launch::async, suite_powersum_identities, upto));
    futures.push_back(std::async(std::launch::async, suite_umbral_identities, upto));

    std::vector<SuiteResult> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

}  // namespace bernlab
