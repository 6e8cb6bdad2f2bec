#include "bernlab/analytic.hpp"

#include "bernlab/bernoulli.hpp"
#include "bernlab/combinatorics.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bernlab {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

/// 16-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration
/// on P_16 from the cosine initial guesses.
struct GaussRule {
    std::array<long double, 16> node;
    std::array<long double, 16> weight;
};

const GaussRule& gauss16() {
    static const GaussRule rule = [] {
        GaussRule r;
        constexpr int n = 16;
        for (int i = 0; i < n; ++i) {
            long double x = std::cos(kPi * (i + 0.75L) / (n + 0.5L));
            long double dp = 0.0L;
            for (int iter = 0; iter < 100; ++iter) {
                long double p0 = 1.0L, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const long double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = pk;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0L);
                const long double step = p1 / dp;
                x -= step;
                if (std::fabs(step) < 1e-19L) break;
            }
            r.node[i] = x;
            r.weight[i] = 2.0L / ((1.0L - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

using Integrand = std::function<long double(long double)>;

long double integrate(const Integrand& f, long double a, long double b,
                      const QuadratureSpec& q) {
    const long double width = (b - a) / q.panel_count;
    long double total = 0.0L;
    if (q.scheme == QuadratureSpec::Scheme::GaussLegendreComposite) {
        const GaussRule& rule = gauss16();
        for (unsigned p = 0; p < q.panel_count; ++p) {
            const long double mid = a + (p + 0.5L) * width;
            const long double half = width / 2.0L;
            long double panel = 0.0L;
            for (int i = 0; i < 16; ++i)
                panel += rule.weight[i] * f(mid + half * rule.node[i]);
            total += panel * half;
        }
    } else {
        for (unsigned p = 0; p < q.panel_count; ++p) {
            const long double x0 = a + p * width;
            const long double x1 = x0 + width;
            total += width / 6.0L * (f(x0) + 4.0L * f((x0 + x1) / 2.0L) + f(x1));
        }
    }
    return total;
}

struct Refined {
    long double value = 0.0L;
    long double delta = 0.0L;
};

Refined integrate_refined(const Integrand& f, long double a, long double b,
                          const QuadratureSpec& q) {
    const long double coarse = integrate(f, a, b, q);
    QuadratureSpec fine = q;
    fine.panel_count *= 2;
    const long double value = integrate(f, a, b, fine);
    return {value, std::fabs(value - coarse)};
}

CheckReport make_report(std::string identity, std::optional<Rational> exact,
                        long double target, long double numeric, long double tol,
                        bool relative, bool converged, std::string note) {
    CheckReport r;
    r.identity = std::move(identity);
    r.exact_value = std::move(exact);
    r.target = target;
    r.numeric_value = numeric;
    r.abs_error = std::fabs(numeric - target);
    if (target == 0.0L) relative = false;
    r.rel_error = target == 0.0L ? r.abs_error : r.abs_error / std::fabs(target);
    r.tolerance = tol;
    r.relative = relative;
    r.converged = converged;
    r.passed = converged && (relative ? r.rel_error <= tol : r.abs_error <= tol);
    r.note = std::move(note);
    return r;
}

long double rational_ld(const Rational& r) { return r.to_ld(); }

/// B_{2k}/(2k)! in one exact step before the float conversion, which
/// stays in range long after the two factors individually would not.
long double bernoulli_over_factorial(const std::vector<Rational>& b, unsigned index) {
    return rational_ld(b[index] / Rational(factorial(index)));
}

std::string format_ld(long double v) {
    std::ostringstream os;
    os.precision(6);
    os << static_cast<double>(v);
    return os.str();
}

}  // namespace

void validate(const QuadratureSpec& q) {
    require(q.upper_cutoff > 0.0L, "QuadratureSpec: upper_cutoff must be positive");
    require(q.panel_count >= 8, "QuadratureSpec: panel_count must be at least 8");
}

QuadratureSpec default_quadrature() { return QuadratureSpec{}; }

CheckReport check_zeta_even(unsigned n, unsigned long long terms, long double tol) {
    require(n >= 1, "check_zeta_even: n must be positive");
    require(terms >= 10, "check_zeta_even: at least 10 terms required");

    const auto b = bernoulli_prefix(2 * n, Convention::Minus);
    const Rational exact = b[2 * n];
    // Right side: (-1)^{n-1} (2 pi)^{2n} B_{2n} / (2 (2n)!).
    const Rational scaled = exact / Rational(2 * factorial(2 * n));
    long double target = rational_ld(scaled) * std::pow(2.0L * kPi, 2.0L * n);
    if (n % 2 == 0) target = -target;

    long double sum = 0.0L;
    for (unsigned long long k = terms; k >= 1; --k)
        sum += std::pow(static_cast<long double>(k), -2.0L * n);
    // Euler-Maclaurin tail from terms+1: integral plus half the first
    // summand; the omitted correction is O(n T^{-2n-1}).
    const long double t1 = static_cast<long double>(terms) + 1.0L;
    const long double tail =
        std::pow(t1, 1.0L - 2.0L * n) / (2.0L * n - 1.0L) + std::pow(t1, -2.0L * n) / 2.0L;
    const long double numeric = sum + tail;

    std::string note = "partial sum of " + std::to_string(terms) +
                       " terms plus integral tail estimate";
    return make_report("zeta/2n=" + std::to_string(2 * n), exact, target, numeric, tol,
                       true, true, std::move(note));
}

CheckReport check_plana(unsigned n, PlanaVariant variant, const QuadratureSpec& q,
                        long double tol) {
    require(n >= 1, "check_plana: n must be positive");
    validate(q);

    const auto b = bernoulli_prefix(2 * n, Convention::Minus);
    const bool second_row =
        variant == PlanaVariant::PowerOverExpp1 || variant == PlanaVariant::CoshSquared;
    Rational exact = b[2 * n];
    if (n % 2 == 0) exact = -exact;  // (-1)^{n-1} B_{2n}
    if (second_row) {
        const BigInt half_powers = int_pow(BigInt(2), 2 * n - 1);
        exact *= Rational(half_powers - 1, half_powers);  // times 1 - 2^{1-2n}
    }
    const long double target = rational_ld(exact);

    const long double m = 2.0L * n;
    Integrand f;
    long double factor = 0.0L;
    const char* name = "";
    switch (variant) {
        case PlanaVariant::PowerOverExpm1:
            f = [n, m](long double t) {
                if (t == 0.0L) return n == 1 ? 1.0L / (2.0L * kPi) : 0.0L;
                return std::pow(t, m - 1.0L) / std::expm1(2.0L * kPi * t);
            };
            factor = 4.0L * n;
            name = "power-over-expm1";
            break;
        case PlanaVariant::SinhSquared:
            f = [n, m](long double t) {
                if (t == 0.0L) return n == 1 ? 1.0L / (kPi * kPi) : 0.0L;
                const long double s = std::sinh(kPi * t);
                return std::pow(t, m) / (s * s);
            };
            factor = kPi;
            name = "sinh-squared";
            break;
        case PlanaVariant::PowerOverExpp1:
            f = [m](long double t) {
                if (t == 0.0L) return 0.0L;
                return std::pow(t, m - 1.0L) / (std::exp(2.0L * kPi * t) + 1.0L);
            };
            factor = 4.0L * n;
            name = "power-over-expp1";
            break;
        case PlanaVariant::CoshSquared:
            f = [m](long double t) {
                const long double c = std::cosh(kPi * t);
                return std::pow(t, m) / (c * c);
            };
            factor = kPi;
            name = "cosh-squared";
            break;
    }

    const Refined integral = integrate_refined(f, 0.0L, q.upper_cutoff, q);
    const long double numeric = factor * integral.value;
    const long double delta = factor * integral.delta;
    const bool converged = delta <= tol / 10.0L * std::fabs(numeric);

    std::string note = converged ? "" : "panel doubling moved the result by " + format_ld(delta);
    return make_report("plana/" + std::string(name) + "/n=" + std::to_string(n),
                       std::move(exact), target, numeric, tol, true, converged,
                       std::move(note));
}

CheckReport check_glaisher(unsigned n, GlaisherVariant variant, long double tol) {
    const unsigned index = 4 * n + 2;
    const auto b = bernoulli_prefix(index, Convention::Minus);

    Rational exact = b[index];
    const char* name = "exp-minus";
    if (variant == GlaisherVariant::OddExpPlus) {
        exact *= Rational(int_pow(BigInt(2), 4 * n + 1) - 1);
        name = "odd-exp-plus";
    }
    const long double target = rational_ld(exact);

    const long double exponent = 4.0L * n + 1.0L;
    long double partial = 0.0L;
    std::string note;
    if (variant == GlaisherVariant::ExpMinus) {
        for (unsigned k = 1; k < 400; ++k) {
            const long double term =
                std::pow(static_cast<long double>(k), exponent) /
                std::expm1(2.0L * kPi * k);
            partial += term;
            if (term < 1e-30L * std::fmax(1.0L, std::fabs(partial))) break;
        }
        long double numeric = 2.0L * index * partial;
        if (n == 0) {
            // The additive correction for the B_2 case; written with
            // the 4 pi denominator it carries the series prefactor
            // 4n+2, i.e. it equals 1/(2 pi) here.
            numeric += (4.0L * n + 2.0L) / (4.0L * kPi);
            note = "n = 0 correction term applied";
        }
        return make_report("glaisher/" + std::string(name) + "/index=" + std::to_string(index),
                           std::move(exact), target, numeric, tol, true, true,
                           std::move(note));
    }
    for (unsigned k = 1; k < 400; k += 2) {
        const long double term = std::pow(static_cast<long double>(k), exponent) /
                                 (std::exp(kPi * k) + 1.0L);
        partial += term;
        if (term < 1e-30L * std::fmax(1.0L, std::fabs(partial))) break;
    }
    const long double numeric = 2.0L * index * partial;
    return make_report("glaisher/" + std::string(name) + "/index=" + std::to_string(index),
                       std::move(exact), target, numeric, tol, true, true, std::move(note));
}

CheckReport check_jensen(unsigned n, const QuadratureSpec& q, long double tol) {
    validate(q);
    const auto b = bernoulli_prefix(n, Convention::Minus);
    Rational exact = b[n];
    if (n % 2 == 1) exact = -exact;  // (-1)^n B_n
    const long double target = rational_ld(exact);

    const auto power = [n](long double t) {
        std::complex<long double> z(0.5L, t);
        std::complex<long double> acc(1.0L, 0.0L);
        for (unsigned i = 0; i < n; ++i) acc *= z;
        return acc;
    };
    const Integrand real_part = [&power](long double t) {
        const long double c = std::cosh(kPi * t);
        return power(t).real() / (c * c);
    };
    const Integrand imag_part = [&power](long double t) {
        const long double c = std::cosh(kPi * t);
        return power(t).imag() / (c * c);
    };

    const Refined re = integrate_refined(real_part, -q.upper_cutoff, q.upper_cutoff, q);
    const long double numeric = kPi / 2.0L * re.value;
    const long double delta = kPi / 2.0L * re.delta;
    const long double imag =
        kPi / 2.0L * integrate(imag_part, -q.upper_cutoff, q.upper_cutoff, q);

    const long double scale = target == 0.0L ? 1.0L : std::fabs(target);
    bool converged = delta <= tol / 10.0L * scale;
    std::string note = "imaginary part " + format_ld(imag) + " (must cancel by symmetry)";
    if (std::fabs(imag) > tol * scale) {
        converged = false;
        note += "; symmetry cancellation failed";
    }
    return make_report("jensen/n=" + std::to_string(n), std::move(exact), target, numeric,
                       tol, true, converged, std::move(note));
}

CheckReport check_cot_egf(long double x, unsigned terms, CotEgfVariant variant,
                          long double tol) {
    require(terms >= 1, "check_cot_egf: at least one term required");
    const long double ax = std::fabs(x);
    if (variant == CotEgfVariant::CosBxHalf) {
        if (!(ax > 0.0L && ax < 2.0L * kPi))
            throw std::domain_error("check_cot_egf: requires 0 < |x| < 2*pi");
    } else {
        if (!(ax > 0.0L && ax < kPi))
            throw std::domain_error("check_cot_egf: requires 0 < |x| < pi");
    }

    const char* name = "";
    long double target = 0.0L;
    long double series = 0.0L;
    if (variant == CotEgfVariant::Sin2Bx) {
        // Every odd Bernoulli number beyond B_1 vanishes, so the
        // truncated sine series is the single term 2x B_1 = -x.
        name = "sin-2bx";
        target = -x;
        series = -x;
    } else {
        const bool doubled = variant == CotEgfVariant::Cos2Bx;
        name = doubled ? "cos-2bx" : "cos-bx-half";
        const long double arg = doubled ? 2.0L * x : x;
        target = doubled ? x * std::cos(x) / std::sin(x)
                         : x / 2.0L * std::cos(x / 2.0L) / std::sin(x / 2.0L);
        const auto b = bernoulli_prefix(2 * terms, Convention::Minus);
        for (unsigned k = 0; k <= terms; ++k) {
            const unsigned idx = 2 * k;
            if (idx >= b.size()) break;
            long double term = bernoulli_over_factorial(b, idx) * std::pow(arg, 2.0L * k);
            if (k % 2 == 1) term = -term;
            series += term;
        }
    }

    std::string note = "series truncated after " + std::to_string(terms) + " terms";
    return make_report("cot-egf/" + std::string(name) + "/x=" + format_ld(x), std::nullopt,
                       target, series, tol, false, true, std::move(note));
}

QuadratureSpec abel_quadrature(long double x) {
    QuadratureSpec q;
    const long double decay = 2.0L * kPi - std::fabs(x);
    q.upper_cutoff = 74.0L / decay;
    q.panel_count = 64;
    return q;
}

CheckReport check_abel_integral(long double x, const QuadratureSpec& q, unsigned terms,
                                long double tol) {
    const long double ax = std::fabs(x);
    if (!(ax > 0.0L && ax < 2.0L * kPi))
        throw std::domain_error("check_abel_integral: requires 0 < |x| < 2*pi");
    validate(q);

    const Integrand f = [x](long double t) {
        if (t == 0.0L) return x / (2.0L * kPi);
        return std::sinh(x * t) / std::expm1(2.0L * kPi * t);
    };
    const Refined integral = integrate_refined(f, 0.0L, q.upper_cutoff, q);
    const long double numeric = 1.0L - 2.0L * x * integral.value;
    const long double delta = 2.0L * ax * integral.delta;

    const long double target = x / 2.0L * std::cos(x / 2.0L) / std::sin(x / 2.0L);
    const auto b = bernoulli_prefix(2 * terms, Convention::Minus);
    long double series = 0.0L;
    for (unsigned k = 0; k <= terms; ++k) {
        const unsigned idx = 2 * k;
        if (idx >= b.size()) break;
        long double term = bernoulli_over_factorial(b, idx) * std::pow(x, 2.0L * k);
        if (k % 2 == 1) term = -term;
        series += term;
    }

    const long double scale = target == 0.0L ? 1.0L : std::fabs(target);
    bool converged = delta <= tol / 10.0L * scale;
    const long double series_error = std::fabs(numeric - series);
    std::string note = "cosine series agrees to " + format_ld(series_error);
    if (series_error > tol * scale) {
        converged = false;
        note += "; series comparison failed";
    }
    return make_report("abel/x=" + format_ld(x), std::nullopt, target, numeric, tol, true,
                       converged, std::move(note));
}

namespace {

long double stirling_series_value(unsigned n, unsigned k_terms,
                                  const std::vector<Rational>& b) {
    const long double nf = static_cast<long double>(n);
    long double approx = (nf - 0.5L) * std::log(nf) - nf +
                         std::log(std::sqrt(2.0L * kPi));
    for (unsigned k = 1; k <= k_terms; ++k) {
        const Rational coeff = b[2 * k] / Rational(BigInt(2 * k) * (2 * k - 1));
        approx += rational_ld(coeff) / std::pow(nf, 2.0L * k - 1.0L);
    }
    return approx;
}

}  // namespace

CheckReport stirling_log_factorial(unsigned n, unsigned k_terms) {
    require(n >= 2, "stirling_log_factorial: n must be at least 2");
    const auto b = bernoulli_prefix(2 * k_terms + 2, Convention::Minus);
    const BigInt fact = factorial(n - 1);
    const long double target = log_big(fact);
    const long double numeric = stirling_series_value(n, k_terms, b);

    const unsigned next = k_terms + 1;
    const Rational omitted_coeff = b[2 * next] / Rational(BigInt(2 * next) * (2 * next - 1));
    const long double omitted = std::fabs(rational_ld(omitted_coeff)) /
                                std::pow(static_cast<long double>(n), 2.0L * next - 1.0L);

    std::string note = "divergent-series criterion: |error| <= |first omitted term| = " +
                       format_ld(omitted);
    return make_report("stirling/n=" + std::to_string(n) + "/terms=" + std::to_string(k_terms),
                       Rational(fact), target, numeric, omitted, false, true,
                       std::move(note));
}

std::vector<long double> stirling_error_curve(unsigned n, unsigned max_terms) {
    require(n >= 2, "stirling_error_curve: n must be at least 2");
    const auto b = bernoulli_prefix(2 * max_terms + 2, Convention::Minus);
    const long double target = log_big(factorial(n - 1));
    std::vector<long double> errors;
    errors.reserve(max_terms + 1);
    for (unsigned k = 0; k <= max_terms; ++k)
        errors.push_back(std::fabs(stirling_series_value(n, k, b) - target));
    return errors;
}

}  // namespace bernlab
