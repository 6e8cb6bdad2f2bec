#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bernlab {

using BigInt = boost::multiprecision::cpp_int;

/// Big integer to long double without overflowing intermediate integer
/// conversions (top 63 bits plus a binary exponent).
long double to_long_double(const BigInt& x);

/// Natural log of a positive big integer, good to a few ulp regardless
/// of magnitude.
long double log_big(const BigInt& x);

/// Arbitrary-precision rational scalar. Always in lowest terms with a
/// positive denominator; zero is 0/1. Every operation renormalizes, so
/// equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_.is_zero())
            throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::strong_ordering operator<=>(const Rational& o) const {
        // a/b <=> c/d  iff  a*d <=> c*b, denominators being positive
        const BigInt l = num_ * o.den_;
        const BigInt r = o.num_ * den_;
        if (l < r) return std::strong_ordering::less;
        if (l == r) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    Rational reciprocal() const {
        if (num_.is_zero())
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    long double to_ld() const { return to_long_double(num_) / to_long_double(den_); }

    /// Canonical text form "num/den"; "/den" omitted for integers.
    std::string str() const;

    /// Parses "[+-]?digits[/digits]" with arbitrary-size digit strings.
    static Rational parse(std::string_view text);

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_.backend().negate();
            den_.backend().negate();
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bernlab
