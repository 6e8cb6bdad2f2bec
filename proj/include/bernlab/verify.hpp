#pragma once

#include "bernlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bernlab {

/// First index where two value lists disagree, comparing the shared
/// prefix only.
struct Mismatch {
    std::size_t index = 0;
    Rational lhs;
    Rational rhs;
};

std::optional<Mismatch> first_difference(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b);

/// Outcome of one verification suite: how many exact comparisons ran
/// and, on failure, a description of the first mismatch (index and
/// both values).
struct SuiteResult {
    std::string suite;
    std::size_t checks = 0;
    bool passed = true;
    std::string failure;
};

/// Runs every cross-method and identity suite up to the given index
/// bound. Suites execute concurrently but the returned order is
/// fixed. Ranges with their own natural bounds are capped (the
/// determinant variants at 16, the matrix inversion at 20, the
/// polynomial identity suite at 20, the umbral binomial identities at
/// 30); the definitional brute-force oracle always runs its full
/// p <= 12, n <= 200 grid.
std::vector<SuiteResult> run_verify(unsigned upto);

}  // namespace bernlab
