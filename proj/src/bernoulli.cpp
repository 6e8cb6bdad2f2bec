#include "bernlab/bernoulli.hpp"

#include "bernlab/combinatorics.hpp"
#include "bernlab/matrix.hpp"
#include "bernlab/umbral.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace bernlab {

const char* convention_name(Convention conv) {
    return conv == Convention::Minus ? "minus" : "plus";
}

void validate(const BernoulliSequence& seq) {
    const auto& v = seq.values;
    if (v.empty() || v[0] != Rational(1))
        throw std::domain_error("BernoulliSequence: index 0 must be 1");
    const Rational half(1, 2);
    if (v.size() > 1) {
        const Rational expected = seq.convention == Convention::Minus ? -half : half;
        if (v[1] != expected)
            throw std::domain_error("BernoulliSequence: index 1 violates the convention");
    }
    for (std::size_t k = 3; k < v.size(); k += 2)
        if (!v[k].is_zero())
            throw std::domain_error("BernoulliSequence: odd index " + std::to_string(k) +
                                    " is nonzero");
    for (std::size_t k = 2; k < v.size(); k += 2) {
        const int expected_sign = (k / 2) % 2 == 1 ? 1 : -1;
        if (v[k].sign() != expected_sign)
            throw std::domain_error("BernoulliSequence: even index " + std::to_string(k) +
                                    " has the wrong sign");
    }
}

namespace {

std::vector<Rational> de_moivre_minus(unsigned N) {
    std::vector<Rational> b(N + 1);
    b[0] = Rational(1);
    for (unsigned p = 1; p <= N; ++p) {
        Rational acc;
        for (unsigned k = 0; k < p; ++k) acc += Rational(binomial(p + 1, k)) * b[k];
        b[p] = -acc / Rational(static_cast<int>(p) + 1);
    }
    return b;
}

std::vector<Rational> de_moivre_plus(unsigned N) {
    std::vector<Rational> b(N + 1);
    b[0] = Rational(1);
    for (unsigned p = 1; p <= N; ++p) {
        // binom(A - 1, p) downgrades to (-1)^p/(p+1); the coefficient
        // of A^p is 1/p!, so the recurrence solves forward.
        const UmbralPolynomial fb = falling_binomial(Rational(-1), p);
        const Poly& c = fb.coefficients();
        Rational acc;
        for (unsigned k = 0; k < p; ++k) acc += c[k] * b[k];
        const Rational target = Rational(p % 2 == 0 ? 1 : -1, BigInt(p) + 1);
        b[p] = (target - acc) / c[p];
    }
    return b;
}

BernoulliSequence finish(Convention conv, std::vector<Rational> values, std::string method) {
    BernoulliSequence seq{conv, std::move(values), std::move(method)};
    validate(seq);
    return seq;
}

}  // namespace

BernoulliSequence gen_de_moivre(unsigned N, Convention conv) {
    auto values = conv == Convention::Minus ? de_moivre_minus(N) : de_moivre_plus(N);
    return finish(conv, std::move(values), "de-moivre");
}

std::vector<Rational> gen_de_moivre_even(unsigned M) {
    if (M == 0) throw std::invalid_argument("gen_de_moivre_even: M must be positive");
    std::vector<Rational> even(M + 1);  // even[m] = B_{2m}, even[0] unused
    for (unsigned m = 1; m <= M; ++m) {
        Rational acc;
        for (unsigned j = 2; j <= m; ++j)
            acc += Rational(binomial(2 * m + 1, 2 * j - 1)) * even[m - j + 1];
        const Rational rhs(2 * static_cast<int>(m) - 1, 2);
        even[m] = (rhs - acc) / Rational(2 * static_cast<int>(m) + 1);
    }
    return {even.begin() + 1, even.end()};
}

BernoulliSequence gen_euler_convolution(unsigned N) {
    std::vector<Rational> b(N + 1);
    b[0] = Rational(1);
    if (N >= 1) b[1] = Rational(-1, 2);
    if (N >= 2) b[2] = Rational(1, 6);
    for (unsigned n = 2; 2 * n <= N; ++n) {
        Rational acc;
        for (unsigned k = 1; k < n; ++k)
            acc += Rational(binomial(2 * n, 2 * k)) * b[2 * k] * b[2 * n - 2 * k];
        b[2 * n] = -acc / Rational(2 * static_cast<int>(n) + 1);
    }
    return finish(Convention::Minus, std::move(b), "euler-conv");
}

Rational genocchi_bernoulli(unsigned n, unsigned m) {
    if (n < 2 || m < n)
        throw std::invalid_argument("genocchi_bernoulli: requires m >= n >= 2");
    BigInt outer = 0;
    for (unsigned k = 2; k <= m; ++k) {
        BigInt inner = 0;
        for (unsigned j = 1; j < k; ++j) {
            const BigInt term = int_pow(BigInt(j), n - 1);
            if (j % 2 == 1)
                inner += term;
            else
                inner -= term;
        }
        outer += binomial(m, k) * inner;
    }
    const BigInt denom = int_pow(BigInt(2), m) * (int_pow(BigInt(2), n) - 1);
    return Rational(BigInt(n) * outer, denom);
}

BernoulliSequence gen_genocchi(unsigned N) {
    std::vector<Rational> b(N + 1);
    b[0] = Rational(1);
    if (N >= 1) b[1] = Rational(-1, 2);
    for (unsigned n = 2; n <= N; ++n) b[n] = genocchi_bernoulli(n, n);
    return finish(Convention::Minus, std::move(b), "genocchi");
}

BernoulliSequence gen_blissard_difference(unsigned N) {
    std::vector<Rational> b(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        Rational acc;
        for (unsigned k = 0; k <= n; ++k) {
            BigInt inner = 0;
            for (unsigned j = 0; j <= k; ++j) {
                const BigInt term = binomial(k, j) * int_pow(BigInt(j) + 1, n);
                if (j % 2 == 0)
                    inner += term;
                else
                    inner -= term;
            }
            acc += Rational(std::move(inner), BigInt(k) + 1);
        }
        b[n] = n % 2 == 0 ? acc : -acc;
    }
    return finish(Convention::Minus, std::move(b), "blissard-diff");
}

BernoulliSequence gen_matrix_inverse(unsigned N) {
    const std::size_t dim = N + 1;
    LowerTriangularMatrix m(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m.set(i, j, Rational(1, factorial(static_cast<unsigned>(i - j) + 1)));
    const LowerTriangularMatrix inv = invert_unit_lower_triangular(m);
    std::vector<Rational> b(dim);
    for (unsigned k = 0; k <= N; ++k) b[k] = Rational(factorial(k)) * inv.at(k, 0);
    return finish(Convention::Minus, std::move(b), "matrix-inv");
}

BernoulliSequence gen_egf_reciprocal(unsigned N, Convention conv) {
    // s_j are the series coefficients of (e^x - 1)/x; t is the
    // truncated reciprocal, so sum_{j<=n} s_j t_{n-j} = 0^n.
    std::vector<Rational> s(N + 1), t(N + 1);
    for (unsigned j = 0; j <= N; ++j) s[j] = Rational(1, factorial(j + 1));
    t[0] = Rational(1);
    for (unsigned n = 1; n <= N; ++n) {
        Rational acc;
        for (unsigned j = 1; j <= n; ++j) acc += s[j] * t[n - j];
        t[n] = -acc;
    }
    if (conv == Convention::Plus) {
        std::vector<Rational> u(N + 1);
        for (unsigned k = 0; k <= N; ++k)
            for (unsigned j = 0; j <= k; ++j) u[k] += t[j] * Rational(1, factorial(k - j));
        t = std::move(u);
    }
    std::vector<Rational> b(N + 1);
    for (unsigned k = 0; k <= N; ++k) b[k] = Rational(factorial(k)) * t[k];
    return finish(conv, std::move(b), "egf");
}

BernoulliSequence gen_determinant(unsigned N, DeterminantVariant variant) {
    std::vector<Rational> b(N + 1);
    b[0] = Rational(1);
    if (N >= 1) {
        // Both variants nest: the n x n matrix is the leading block of
        // the N x N one, so every determinant falls out of one
        // leading-minor pass.
        LowerTriangularMatrix m(N, 1);
        for (std::size_t i = 1; i <= N; ++i) {
            for (std::size_t j = 1; j <= std::min<std::size_t>(i + 1, N); ++j) {
                if (variant == DeterminantVariant::Hammond)
                    m.set(i - 1, j - 1, Rational(binomial(static_cast<unsigned>(i) + 1,
                                                          static_cast<unsigned>(j) - 1)));
                else
                    m.set(i - 1, j - 1,
                          Rational(1, factorial(static_cast<unsigned>(i - j) + 2)));
            }
        }
        const std::vector<Rational> dets = leading_minors(m);
        for (unsigned n = 1; n <= N; ++n) {
            Rational value = variant == DeterminantVariant::Hammond
                                 ? dets[n - 1] / Rational(factorial(n + 1))
                                 : Rational(factorial(n)) * dets[n - 1];
            b[n] = n % 2 == 0 ? value : -value;
        }
    }
    const char* name = variant == DeterminantVariant::Hammond ? "det-hammond" : "det-factorial";
    return finish(Convention::Minus, std::move(b), name);
}

BernoulliSequence convert_convention(const BernoulliSequence& s) {
    BernoulliSequence out = s;
    out.convention = s.convention == Convention::Minus ? Convention::Plus : Convention::Minus;
    for (std::size_t k = 1; k < out.values.size(); k += 2) out.values[k] = -out.values[k];
    validate(out);
    return out;
}

std::vector<Rational> bernoulli_prefix(unsigned N, Convention conv) {
    static std::mutex mutex;
    static std::vector<Rational> cache_minus;
    static std::vector<Rational> cache_plus;
    std::lock_guard<std::mutex> lock(mutex);
    auto& cache = conv == Convention::Minus ? cache_minus : cache_plus;
    if (cache.size() < N + 1) cache = gen_de_moivre(N, conv).values;
    return {cache.begin(), cache.begin() + N + 1};
}

}  // namespace bernlab
