#include "bernlab/rational.hpp"

#include <cctype>
#include <cmath>

namespace bernlab {

long double to_long_double(const BigInt& x) {
    if (x.is_zero()) return 0.0L;
    const BigInt mag = boost::multiprecision::abs(x);
    const auto bits = boost::multiprecision::msb(mag) + 1;
    if (bits <= 63) {
        auto v = static_cast<long double>(static_cast<long long>(mag));
        return x.sign() < 0 ? -v : v;
    }
    // Keep the top 63 bits and restore the shifted-out magnitude with ldexp.
    const auto shift = static_cast<int>(bits - 63);
    const BigInt top = mag >> shift;
    auto v = std::ldexp(static_cast<long double>(static_cast<long long>(top)), shift);
    return x.sign() < 0 ? -v : v;
}

long double log_big(const BigInt& x) {
    if (x.sign() <= 0)
        throw std::domain_error("log_big: argument must be positive");
    const auto bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 63)
        return std::log(static_cast<long double>(static_cast<long long>(x)));
    const auto shift = static_cast<int>(bits - 63);
    const BigInt top = x >> shift;
    const auto mant = static_cast<long double>(static_cast<long long>(top));
    return std::log(mant) + static_cast<long double>(shift) * 0.6931471805599453094172321214581766L;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("Rational::parse: empty input");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin)
        throw std::invalid_argument("Rational::parse: missing numerator digits");
    BigInt num(std::string(text.substr(num_begin, pos - num_begin)));
    BigInt den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw std::invalid_argument("Rational::parse: unexpected character");
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size())
            throw std::invalid_argument("Rational::parse: malformed denominator");
        den = BigInt(std::string(text.substr(den_begin, pos - den_begin)));
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    unsigned e = exponent;
    while (e != 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bernlab
