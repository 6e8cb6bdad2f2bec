#include "bernlab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace bernlab {

LowerTriangularMatrix::LowerTriangularMatrix(std::size_t dimension, int band)
    : dim_(dimension), band_(band), entries_(dimension * dimension) {
    if (dimension == 0)
        throw std::invalid_argument("LowerTriangularMatrix: dimension must be positive");
}

void LowerTriangularMatrix::set(std::size_t i, std::size_t j, Rational value) {
    if (i >= dim_ || j >= dim_)
        throw std::out_of_range("LowerTriangularMatrix::set: index out of range");
    if (static_cast<long long>(j) > static_cast<long long>(i) + band_) {
        if (!value.is_zero())
            throw std::invalid_argument("LowerTriangularMatrix::set: entry above the band");
        return;
    }
    entries_[i * dim_ + j] = std::move(value);
}

LowerTriangularMatrix invert_unit_lower_triangular(const LowerTriangularMatrix& m) {
    if (m.band() > 0)
        throw std::domain_error("invert_unit_lower_triangular: matrix is not lower triangular");
    const std::size_t n = m.dimension();
    for (std::size_t i = 0; i < n; ++i)
        if (m.at(i, i).is_zero())
            throw std::domain_error("invert_unit_lower_triangular: zero diagonal entry");

    LowerTriangularMatrix inv(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        inv.set(j, j, m.at(j, j).reciprocal());
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational acc;
            for (std::size_t k = j; k < i; ++k) acc += m.at(i, k) * inv.at(k, j);
            inv.set(i, j, -acc / m.at(i, i));
        }
    }
    return inv;
}

LowerTriangularMatrix matrix_multiply(const LowerTriangularMatrix& a,
                                      const LowerTriangularMatrix& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("matrix_multiply: dimension mismatch");
    const std::size_t n = a.dimension();
    const int band = std::min<long long>(a.band() + b.band(), static_cast<long long>(n) - 1);
    LowerTriangularMatrix c(n, static_cast<int>(band));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t jmax = std::min(n - 1, i + static_cast<std::size_t>(std::max(band, 0)));
        for (std::size_t j = 0; j <= jmax; ++j) {
            Rational acc;
            for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            c.set(i, j, std::move(acc));
        }
    }
    return c;
}

std::vector<Rational> leading_minors(const LowerTriangularMatrix& m) {
    if (m.band() > 1)
        throw std::domain_error("leading_minors: matrix is not lower Hessenberg");
    const std::size_t n = m.dimension();
    // d[k] holds the k x k leading minor; expansion along the last row
    // of each block only meets the superdiagonal product because all
    // entries further right vanish.
    std::vector<Rational> d(n + 1);
    d[0] = Rational(1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = m.at(k - 1, k - 1) * d[k - 1];
        Rational prod(1);
        bool negative = false;
        for (std::size_t j = k - 1; j > 0; --j) {
            prod *= m.at(j - 1, j);
            negative = !negative;
            if (m.at(k - 1, j - 1).is_zero() || prod.is_zero()) continue;
            const Rational term = m.at(k - 1, j - 1) * prod * d[j - 1];
            if (negative)
                acc -= term;
            else
                acc += term;
        }
        d[k] = std::move(acc);
    }
    d.erase(d.begin());
    return d;
}

Rational determinant_bareiss(const LowerTriangularMatrix& m) {
    const std::size_t n = m.dimension();
    // Clear each row to integers first; Bareiss division stays exact
    // over the integers and the row factors are divided back out.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt row_scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, m.at(i, j).denominator());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational scaled = m.at(i, j) * Rational(l);
            a[i][j] = scaled.numerator();
        }
        row_scale *= l;
    }

    bool negate = false;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt det = a[n - 1][n - 1];
    if (negate) det = -det;
    return Rational(std::move(det), std::move(row_scale));
}

Rational determinant(const LowerTriangularMatrix& m) {
    if (m.band() <= 1) return leading_minors(m).back();
    return determinant_bareiss(m);
}

}  // namespace bernlab
