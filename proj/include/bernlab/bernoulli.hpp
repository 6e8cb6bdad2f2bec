#pragma once

#include "bernlab/rational.hpp"

#include <string>
#include <vector>

namespace bernlab {

/// Sign convention for index 1. Minus is the current convention
/// (B_1 = -1/2); Plus is the original one (B_1 = +1/2). The two
/// sequences agree everywhere else up to the sign flip at odd
/// indices, which all vanish beyond 1.
enum class Convention { Minus, Plus };

const char* convention_name(Convention conv);

/// Prefix B_0..B_N under a declared convention, tagged with the name
/// of the procedure that produced it.
struct BernoulliSequence {
    Convention convention = Convention::Minus;
    std::vector<Rational> values;
    std::string method;
};

/// Checks the structural invariants: B_0 = 1, B_1 = -1/2 or +1/2 per
/// convention, odd entries beyond 1 vanish, and the even entries
/// alternate in sign. Throws std::domain_error naming the first
/// violated index.
void validate(const BernoulliSequence& seq);

/// Forward recurrence: each B_p is solved from sum C(p+1,k) B_k = 0^p
/// (Minus) or from binom(B-1, p) downgrading to (-1)^p/(p+1) (Plus).
BernoulliSequence gen_de_moivre(unsigned N, Convention conv);

/// Even-index-only recurrence
/// C(2m+1,1)B_2m + C(2m+1,3)B_{2m-2} + ... + C(2m+1,2m-1)B_2 = (2m-1)/2,
/// solved forward in m. Returns B_2, B_4, ..., B_{2M}.
std::vector<Rational> gen_de_moivre_even(unsigned M);

/// Quadratic convolution on even indices:
/// (2n+1)B_{2n} = -sum_{k=1}^{n-1} C(2n,2k) B_{2k} B_{2n-2k} for n > 1,
/// seeded with B_0, B_1, B_2.
BernoulliSequence gen_euler_convolution(unsigned N);

/// Finite double sum 2^m (2^n - 1) B_n = n sum_{k=2}^{m} C(m,k)
/// sum_{j=1}^{k-1} (-1)^{j-1} j^{n-1}, instantiated at m = n.
/// Indices 0 and 1 are filled from the convention.
BernoulliSequence gen_genocchi(unsigned N);

/// Single value by the same sum with an explicit free parameter
/// m >= n; the result is independent of m.
Rational genocchi_bernoulli(unsigned n, unsigned m);

/// Direct double sum
/// (-1)^n B_n = sum_{k=0}^{n} [sum_{j=0}^{k} (-1)^j C(k,j) (j+1)^n]/(k+1).
BernoulliSequence gen_blissard_difference(unsigned N);

/// Inverts the (N+1)x(N+1) lower-triangular matrix with entries
/// 1/(i-j+1)! exactly; B_k is k! times the inverse entry at offset k.
BernoulliSequence gen_matrix_inverse(unsigned N);

/// Truncated power-series reciprocal of (e^x - 1)/x; the Plus variant
/// multiplies the reciprocal by e^x. B_k = k! times coefficient k.
BernoulliSequence gen_egf_reciprocal(unsigned N, Convention conv);

/// The two Hessenberg determinant definitions. Hammond uses entries
/// C(i+1, j-1) and recovers (-1)^n B_n as det/(n+1)!; Factorial uses
/// entries 1/(i-j+2)! and recovers (-1)^n B_n as n! * det. (Indices in
/// the entry formulas are 1-based; storage is 0-based.)
enum class DeterminantVariant { Hammond, Factorial };

BernoulliSequence gen_determinant(unsigned N, DeterminantVariant variant);

/// Flips odd-index signs and toggles the convention tag; involution.
BernoulliSequence convert_convention(const BernoulliSequence& s);

/// Memoized De Moivre prefix, the designated exact source for the
/// power-sum and analytic modules. Thread-safe; returns a copy of
/// B_0..B_N.
std::vector<Rational> bernoulli_prefix(unsigned N, Convention conv);

}  // namespace bernlab
