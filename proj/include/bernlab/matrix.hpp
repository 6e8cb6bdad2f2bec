#pragma once

#include "bernlab/rational.hpp"

#include <cstddef>
#include <vector>

namespace bernlab {

/// Square exact-rational matrix whose entries vanish above a declared
/// band: entry (i, j) = 0 whenever j > i + band. band 0 is lower
/// triangular, band 1 is lower Hessenberg. Construction checks the
/// band invariant.
class LowerTriangularMatrix {
public:
    LowerTriangularMatrix(std::size_t dimension, int band);

    std::size_t dimension() const { return dim_; }
    int band() const { return band_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    /// Rejects writes above the declared band.
    void set(std::size_t i, std::size_t j, Rational value);

private:
    std::size_t dim_;
    int band_;
    std::vector<Rational> entries_;
};

/// Exact inverse of a lower-triangular matrix (band 0) with nonzero
/// diagonal, by forward substitution. Throws std::domain_error on a
/// zero diagonal entry or wrong band.
LowerTriangularMatrix invert_unit_lower_triangular(const LowerTriangularMatrix& m);

LowerTriangularMatrix matrix_multiply(const LowerTriangularMatrix& a,
                                      const LowerTriangularMatrix& b);

/// Exact determinant. Lower Hessenberg input (band <= 1) uses the
/// O(n^2) leading-minor recurrence; anything wider falls back to
/// fraction-free elimination.
Rational determinant(const LowerTriangularMatrix& m);

/// All leading principal minors d_1..d_n of a lower Hessenberg matrix
/// in one O(n^2) pass (d_k is the determinant of the top-left k x k
/// block).
std::vector<Rational> leading_minors(const LowerTriangularMatrix& m);

/// Fraction-free (Bareiss) elimination determinant for any square
/// exact matrix, used as an independent cross-check of the minor
/// recurrence.
Rational determinant_bareiss(const LowerTriangularMatrix& m);

}  // namespace bernlab
