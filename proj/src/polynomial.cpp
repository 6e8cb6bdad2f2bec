#include "bernlab/polynomial.hpp"

namespace bernlab {

namespace {

std::string term_str(const Rational& coeff, std::size_t power, const std::string& var) {
    const BigInt num = boost::multiprecision::abs(coeff.numerator());
    const BigInt& den = coeff.denominator();
    std::string s;
    if (power == 0) {
        s = num.str();
    } else {
        if (num != 1) {
            s = num.str();
            s += '*';
        }
        s += var;
        if (power > 1) {
            s += '^';
            s += std::to_string(power);
        }
    }
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

}  // namespace

std::string poly_str(const Poly& p, const std::string& var) {
    std::string out;
    for (std::size_t i = p.size(); i > 0; --i) {
        const Rational& c = p[i - 1];
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += term_str(c, i - 1, var);
    }
    return out.empty() ? "0" : out;
}

}  // namespace bernlab
