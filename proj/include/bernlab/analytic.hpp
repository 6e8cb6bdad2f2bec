#pragma once

#include "bernlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bernlab {

/// Truncated-interval quadrature parameters. All integrands here
/// decay exponentially, so the truncation point controls the tail
/// error analytically.
struct QuadratureSpec {
    enum class Scheme { GaussLegendreComposite, CompositeSimpson };

    long double upper_cutoff = 25.0L;
    unsigned panel_count = 64;
    Scheme scheme = Scheme::GaussLegendreComposite;
};

/// Throws std::invalid_argument unless upper_cutoff > 0 and
/// panel_count >= 8.
void validate(const QuadratureSpec& q);

QuadratureSpec default_quadrature();

/// Outcome of one floating-point identity check. exact_value is the
/// exact rational ingredient of the identity when it has one (the
/// targets involving pi or logarithms do not); target is the value
/// the numeric side must reproduce, in the widest native float.
struct CheckReport {
    std::string identity;
    std::optional<Rational> exact_value;
    long double target = 0.0L;
    long double numeric_value = 0.0L;
    long double abs_error = 0.0L;
    long double rel_error = 0.0L;
    long double tolerance = 0.0L;
    bool relative = true;    // which error measure the tolerance bounds
    bool converged = true;   // quadrature refinement stability (true for series)
    bool passed = false;
    std::string note;
};

inline constexpr long double kZetaTol = 1e-6L;
inline constexpr long double kQuadratureTol = 1e-8L;
inline constexpr long double kSeriesTol = 1e-8L;
inline constexpr long double kJensenTol = 1e-6L;
inline constexpr long double kEgfTol = 1e-10L;

/// zeta(2n) partial sum plus an integral tail estimate against
/// (-1)^{n-1} (2 pi)^{2n} B_{2n} / (2 (2n)!).
CheckReport check_zeta_even(unsigned n, unsigned long long terms,
                            long double tol = kZetaTol);

/// The four Plana integrands. The first pair recovers
/// (-1)^{n-1} B_{2n}; the second pair recovers the same value scaled
/// by (1 - 2^{1-2n}).
enum class PlanaVariant { PowerOverExpm1, SinhSquared, PowerOverExpp1, CoshSquared };

CheckReport check_plana(unsigned n, PlanaVariant variant, const QuadratureSpec& q,
                        long double tol = kQuadratureTol);

/// Exponential series for B_{4n+2}. ExpMinus sums k^{4n+1}/(e^{2 pi k}-1)
/// over k >= 1 with the additive n = 0 correction; OddExpPlus sums odd
/// k^{4n+1}/(e^{k pi}+1) against (2^{4n+1}-1) B_{4n+2}.
enum class GlaisherVariant { ExpMinus, OddExpPlus };

CheckReport check_glaisher(unsigned n, GlaisherVariant variant,
                           long double tol = kSeriesTol);

/// (pi/2) times the symmetric integral of (1/2 + it)^n / cosh^2(pi t)
/// against (-1)^n B_n; the imaginary part must cancel to tolerance.
CheckReport check_jensen(unsigned n, const QuadratureSpec& q,
                         long double tol = kJensenTol);

/// Truncated Bernoulli cosine/sine series against the cotangent
/// closed forms: cos 2Bx = x cot x, sin 2Bx = -x (|x| < pi), and
/// cos Bx = (x/2) cot(x/2) (|x| < 2 pi).
enum class CotEgfVariant { Cos2Bx, Sin2Bx, CosBxHalf };

CheckReport check_cot_egf(long double x, unsigned terms, CotEgfVariant variant,
                          long double tol = kEgfTol);

/// Quadrature of 1 - 2x times the integral of sinh(xt)/(e^{2 pi t}-1)
/// against (x/2) cot(x/2) and against the truncated cosine series,
/// for 0 < |x| < 2 pi.
CheckReport check_abel_integral(long double x, const QuadratureSpec& q, unsigned terms,
                                long double tol = kQuadratureTol);

/// Cutoff scaled to the slow e^{-(2 pi - |x|) t} decay of the Abel
/// integrand.
QuadratureSpec abel_quadrature(long double x);

/// Truncated asymptotic series for log (n-1)! with k_terms Bernoulli
/// correction terms. The acceptance criterion of a divergent series:
/// |error| <= |first omitted term| (the report's tolerance field).
CheckReport stirling_log_factorial(unsigned n, unsigned k_terms);

/// Absolute error of the Stirling series at fixed n for
/// k = 0..max_terms correction terms; for small n the curve attains
/// an interior minimum and then grows (divergence witness).
std::vector<long double> stirling_error_curve(unsigned n, unsigned max_terms);

}  // namespace bernlab
