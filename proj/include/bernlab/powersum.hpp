#pragma once

#include "bernlab/bernoulli.hpp"
#include "bernlab/polynomial.hpp"
#include "bernlab/rational.hpp"

#include <string>
#include <vector>

namespace bernlab {

/// Closed form of a power sum in the variable n: S_p(n) = sum of k^p
/// for 0 <= k <= n-1 (Minus) or T_p(n) = sum for 1 <= k <= n (Plus).
/// Degree is exactly p+1 with leading coefficient 1/(p+1) and a zero
/// constant term.
struct PowerSumPolynomial {
    unsigned power = 0;
    Convention convention = Convention::Minus;
    Poly coefficients;  // index j = coefficient of n^j
};

/// Checks the degree and constant-term invariants; throws
/// std::domain_error on violation.
void validate(const PowerSumPolynomial& poly);

/// The three in-scope constructions. The integral form is a separate
/// operation (Minus only) rather than a fourth tag.
enum class BuildMethod { ClosedForm, PascalSystem, ProuhetIntegrate };

/// S_p(n) = [sum_{k=0}^p C(p+1,k) B_k n^{p+1-k}]/(p+1), with the
/// convention's own Bernoulli prefix.
PowerSumPolynomial build_closed_form(unsigned p, Convention conv);

/// Forward substitution in the triangular system
/// sum_{k=0}^p C(p+1,k) S_k(n) = n^{p+1}; the Plus result is
/// T_p = S_p + n^p.
PowerSumPolynomial build_pascal(unsigned p, Convention conv);

/// Iterates S_p = antiderivative of p*S_{p-1} plus a linear term c*n,
/// with c fixed by S_p(1) = 0 (Minus) or T_p(1) = 1 (Plus). The
/// fitted linear coefficients are the convention's Bernoulli numbers;
/// pass fitted to collect c_0..c_p.
PowerSumPolynomial build_prouhet(unsigned p, Convention conv,
                                 std::vector<Rational>* fitted = nullptr);

/// S_p(n) as the antiderivative of the downgraded Bernoulli
/// polynomial (B+x)^p evaluated from 0 to n (Minus convention).
PowerSumPolynomial build_integral_form(unsigned p);

/// Dispatch by method tag; the integral form stays a separate call.
PowerSumPolynomial build(unsigned p, Convention conv, BuildMethod method);

/// Exact Horner evaluation; negative arguments are permitted (the
/// polynomial extension matters for the parity and special-value
/// identities).
Rational evaluate(const PowerSumPolynomial& poly, const BigInt& n);

/// Literal big-integer summation, the definitional oracle; 0^0 = 1.
Rational brute_force_sum(unsigned p, unsigned n, Convention conv);

/// Result of folding out the n^p/2 half-term: S_p(n) + n^p/2 must
/// contain only exponents of parity p+1 (for p > 0, Minus).
struct ParityReport {
    unsigned power = 0;
    unsigned parity = 0;  // (p+1) mod 2
    Poly folded;
    std::vector<unsigned> violations;  // exponents with wrong-parity nonzero coefficients
    bool passed = false;
};

ParityReport parity_decompose(const PowerSumPolynomial& poly);

/// Human form of the coefficients, e.g. "n^4/4 - n^3/2 + n^2/4".
std::string to_string(const PowerSumPolynomial& poly);

}  // namespace bernlab
