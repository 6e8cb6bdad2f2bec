#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernlab/bernoulli.hpp"
#include "bernlab/combinatorics.hpp"
#include "bernlab/matrix.hpp"

#include <random>

using namespace bernlab;

namespace {

/// Textbook cofactor expansion along the first row, as an independent
/// determinant oracle for small dimensions.
Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Rational>> minor(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        const Rational term = m[0][j] * cofactor_det(minor);
        det += j % 2 == 0 ? term : -term;
    }
    return det;
}

std::vector<std::vector<Rational>> dense_copy(const LowerTriangularMatrix& m) {
    std::vector<std::vector<Rational>> out(m.dimension(),
                                           std::vector<Rational>(m.dimension()));
    for (std::size_t i = 0; i < m.dimension(); ++i)
        for (std::size_t j = 0; j < m.dimension(); ++j) out[i][j] = m.at(i, j);
    return out;
}

LowerTriangularMatrix random_matrix(std::mt19937& rng, std::size_t dim, int band) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    LowerTriangularMatrix m(dim, band);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim && j <= i + static_cast<std::size_t>(band); ++j)
            m.set(i, j, Rational(num(rng), den(rng)));
    return m;
}

}  // namespace

TEST_CASE("band invariant") {
    LowerTriangularMatrix m(3, 1);
    m.set(0, 1, Rational(5));
    CHECK(m.at(0, 1) == Rational(5));
    CHECK(m.at(0, 2) == Rational(0));
    CHECK_THROWS_AS(m.set(0, 2, Rational(1)), std::invalid_argument);
    CHECK_NOTHROW(m.set(0, 2, Rational(0)));

    LowerTriangularMatrix lower(3, 0);
    CHECK_THROWS_AS(lower.set(1, 2, Rational(1)), std::invalid_argument);
}

TEST_CASE("triangular inverse by forward substitution") {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> diag(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 1 + trial;
        LowerTriangularMatrix m(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < i; ++j) m.set(i, j, Rational(num(rng), den(rng)));
            m.set(i, i, Rational(trial % 2 == 0 ? diag(rng) : -diag(rng), den(rng)));
        }
        const LowerTriangularMatrix inv = invert_unit_lower_triangular(m);
        const LowerTriangularMatrix prod = matrix_multiply(m, inv);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                CHECK(prod.at(i, j) == Rational(i == j ? 1 : 0));
    }
}

TEST_CASE("inverse rejects bad input") {
    LowerTriangularMatrix hess(2, 1);
    CHECK_THROWS_AS(invert_unit_lower_triangular(hess), std::domain_error);

    LowerTriangularMatrix singular(2, 0);
    singular.set(0, 0, Rational(1));
    singular.set(1, 0, Rational(3));
    CHECK_THROWS_AS(invert_unit_lower_triangular(singular), std::domain_error);
}

TEST_CASE("factorial-matrix inverse carries the generating sequence") {
    // Entries 1/(i-j+1)! invert to c_{i-j}/(i-j)! with c_0 = 1,
    // c_1 = -1/2, c_2 = 1/6, c_3 = 0, c_4 = -1/30.
    const std::size_t dim = 5;
    LowerTriangularMatrix m(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m.set(i, j, Rational(1, factorial(static_cast<unsigned>(i - j) + 1)));
    const LowerTriangularMatrix inv = invert_unit_lower_triangular(m);
    const std::vector<Rational> expected = {Rational(1), Rational(-1, 2), Rational(1, 6),
                                            Rational(0), Rational(-1, 30)};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            CHECK(inv.at(i, j) ==
                  expected[i - j] * Rational(1, factorial(static_cast<unsigned>(i - j))));
}

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937 rng(11u);
    for (std::size_t dim = 1; dim <= 5; ++dim) {
        for (int band = 0; band <= static_cast<int>(dim); ++band) {
            const LowerTriangularMatrix m = random_matrix(rng, dim, band);
            const Rational oracle = cofactor_det(dense_copy(m));
            CHECK(determinant(m) == oracle);
            CHECK(determinant_bareiss(m) == oracle);
        }
    }
}

TEST_CASE("leading minors agree with per-block determinants") {
    std::mt19937 rng(13u);
    const LowerTriangularMatrix m = random_matrix(rng, 6, 1);
    const std::vector<Rational> minors = leading_minors(m);
    REQUIRE(minors.size() == 6);
    for (std::size_t k = 1; k <= 6; ++k) {
        LowerTriangularMatrix block(k, 1);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k && j <= i + 1; ++j) block.set(i, j, m.at(i, j));
        CHECK(minors[k - 1] == cofactor_det(dense_copy(block)));
        CHECK(minors[k - 1] == determinant_bareiss(block));
    }
}

TEST_CASE("bareiss handles a singular pivot") {
    // First pivot zero forces a row swap; the matrix is regular.
    LowerTriangularMatrix m(3, 3);
    const int entries[3][3] = {{0, 2, 1}, {1, 0, 3}, {2, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.set(i, j, Rational(entries[i][j]));
    CHECK(determinant_bareiss(m) == cofactor_det(dense_copy(m)));
    CHECK(determinant_bareiss(m) == Rational(13));
}

TEST_CASE("binomial-entry minors reproduce the alternating sequence values") {
    // det of the n x n block with entries C(i+1, j-1), divided by
    // (n+1)!, gives the magnitude of the sequence at n up to sign.
    const unsigned N = 8;
    LowerTriangularMatrix m(N, 1);
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= std::min<std::size_t>(i + 1, N); ++j)
            m.set(i - 1, j - 1,
                  Rational(binomial(static_cast<unsigned>(i) + 1,
                                    static_cast<unsigned>(j) - 1)));
    const std::vector<Rational> minors = leading_minors(m);
    const std::vector<Rational> expected = {Rational(1),   Rational(1), Rational(0),
                                            Rational(-4),  Rational(0), Rational(120),
                                            Rational(0),   Rational(-12096)};
    for (std::size_t n = 0; n < N; ++n) CHECK(minors[n] == expected[n]);
}
