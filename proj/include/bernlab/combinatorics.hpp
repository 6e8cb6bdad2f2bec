#pragma once

#include "bernlab/rational.hpp"

namespace bernlab {

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

/// C(n, k) over big integers, zero for k > n.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

/// base^exp with the 0^0 = 1 convention used throughout.
inline BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

}  // namespace bernlab
