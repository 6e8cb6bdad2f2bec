#include "bernlab/analytic.hpp"
#include "bernlab/bernoulli.hpp"
#include "bernlab/io.hpp"
#include "bernlab/powersum.hpp"
#include "bernlab/umbral.hpp"
#include "bernlab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace bernlab;

OutputFormat resolve_format(const std::string& name) {
    return parse_format(name).value();
}

std::size_t max_numerator_bits(const std::vector<Rational>& values) {
    std::size_t best = 0;
    for (const auto& v : values) {
        if (v.is_zero()) continue;
        BigInt num = v.numerator();
        if (num < 0) num = -num;
        best = std::max(best,
                        static_cast<std::size_t>(boost::multiprecision::msb(num)) + 1);
    }
    return best;
}

BernoulliSequence generate(const std::string& method, unsigned upto, Convention conv) {
    if (method == "egf") return gen_egf_reciprocal(upto, conv);
    if (method == "de-moivre") return gen_de_moivre(upto, conv);

    BernoulliSequence seq;
    if (method == "de-moivre-even") {
        seq.convention = Convention::Minus;
        seq.method = "de-moivre-even";
        seq.values.assign(upto + 1, Rational(0));
        seq.values[0] = Rational(1);
        if (upto >= 1) seq.values[1] = Rational(-1, 2);
        if (upto >= 2) {
            const auto even = gen_de_moivre_even(upto / 2);
            for (std::size_t m = 1; m <= even.size(); ++m)
                seq.values[2 * m] = even[m - 1];
        }
        validate(seq);
    } else if (method == "euler-conv") {
        seq = gen_euler_convolution(upto);
    } else if (method == "genocchi") {
        seq = gen_genocchi(upto);
    } else if (method == "blissard-diff") {
        seq = gen_blissard_difference(upto);
    } else if (method == "matrix-inv") {
        seq = gen_matrix_inverse(upto);
    } else if (method == "det-hammond") {
        seq = gen_determinant(upto, DeterminantVariant::Hammond);
    } else {
        seq = gen_determinant(upto, DeterminantVariant::Factorial);
    }
    return conv == Convention::Plus ? convert_convention(seq) : seq;
}

int run_gen(const std::string& method, unsigned upto, Convention conv,
            bool show_symbolic, OutputFormat fmt) {
    const BernoulliSequence seq = generate(method, upto, conv);

    std::vector<std::string> symbolic;
    if (show_symbolic) {
        for (unsigned p = 0; p <= upto; ++p) {
            const UmbralPolynomial u = conv == Convention::Minus
                                           ? shift_power(Rational(1), p + 1)
                                           : falling_binomial(Rational(-1), p);
            symbolic.push_back("p=" + std::to_string(p) + ": " + u.str());
        }
    }

    if (fmt == OutputFormat::Json && show_symbolic) {
        nlohmann::ordered_json obj = to_json(seq);
        obj["symbolic"] = symbolic;
        std::cout << obj.dump(2) << "\n";
        return 0;
    }
    std::cout << render_sequence(seq, fmt);
    if (fmt == OutputFormat::Plain)
        for (const auto& line : symbolic) std::cout << line << "\n";
    return 0;
}

int run_powersum(const std::string& method, unsigned p, Convention conv,
                 bool have_n, long long n, OutputFormat fmt) {
    if (method == "integral" && conv == Convention::Plus) {
        std::cerr << "error: the integral build is defined for the minus convention only\n";
        return 2;
    }
    PowerSumPolynomial poly;
    if (method == "closed")
        poly = build(p, conv, BuildMethod::ClosedForm);
    else if (method == "pascal")
        poly = build(p, conv, BuildMethod::PascalSystem);
    else if (method == "prouhet")
        poly = build(p, conv, BuildMethod::ProuhetIntegrate);
    else
        poly = build_integral_form(p);

    if (!have_n) {
        std::cout << render_polynomial(poly, fmt);
        return 0;
    }
    EvaluatedSum result;
    result.power = p;
    result.convention = conv;
    result.n = BigInt(n);
    result.value = evaluate(poly, result.n);
    std::cout << render_evaluated(result, fmt);
    return 0;
}

int run_verify_cmd(unsigned upto, OutputFormat fmt) {
    const auto suites = run_verify(upto);
    std::cout << render_suites(suites, fmt);
    for (const auto& s : suites)
        if (!s.passed) return 1;
    return 0;
}

struct AnalyticArgs {
    std::string check;
    bool have_n = false;
    unsigned n = 0;
    long double x = 1.0L;
    bool have_terms = false;
    unsigned long long terms = 0;
    std::string variant;
    bool have_cutoff = false;
    long double cutoff = 0.0L;
    bool have_panels = false;
    unsigned panels = 0;
    std::string scheme = "gauss";
    bool have_tol = false;
    long double tol = 0.0L;
};

int run_analytic(const AnalyticArgs& a, OutputFormat fmt) {
    QuadratureSpec q = a.check == "abel" ? abel_quadrature(a.x) : default_quadrature();
    if (a.have_cutoff) q.upper_cutoff = a.cutoff;
    if (a.have_panels) q.panel_count = a.panels;
    q.scheme = a.scheme == "simpson" ? QuadratureSpec::Scheme::CompositeSimpson
                                     : QuadratureSpec::Scheme::GaussLegendreComposite;
    validate(q);

    const auto bad_variant = [&](const char* allowed) {
        std::cerr << "error: --variant for --check " << a.check << " must be one of "
                  << allowed << "\n";
        return 2;
    };

    CheckReport report;
    if (a.check == "zeta") {
        const unsigned n = a.have_n ? a.n : 1;
        const unsigned long long terms = a.have_terms ? a.terms : 100000ULL;
        report = check_zeta_even(n, terms, a.have_tol ? a.tol : kZetaTol);
    } else if (a.check == "plana") {
        const unsigned n = a.have_n ? a.n : 1;
        PlanaVariant variant = PlanaVariant::PowerOverExpm1;
        if (a.variant == "sinh2")
            variant = PlanaVariant::SinhSquared;
        else if (a.variant == "expp1")
            variant = PlanaVariant::PowerOverExpp1;
        else if (a.variant == "cosh2")
            variant = PlanaVariant::CoshSquared;
        else if (!a.variant.empty() && a.variant != "expm1")
            return bad_variant("expm1, sinh2, expp1, cosh2");
        report = check_plana(n, variant, q, a.have_tol ? a.tol : kQuadratureTol);
    } else if (a.check == "glaisher") {
        const unsigned n = a.have_n ? a.n : 0;
        GlaisherVariant variant = GlaisherVariant::ExpMinus;
        if (a.variant == "odd-exp-plus")
            variant = GlaisherVariant::OddExpPlus;
        else if (!a.variant.empty() && a.variant != "exp-minus")
            return bad_variant("exp-minus, odd-exp-plus");
        report = check_glaisher(n, variant, a.have_tol ? a.tol : kSeriesTol);
    } else if (a.check == "jensen") {
        const unsigned n = a.have_n ? a.n : 0;
        report = check_jensen(n, q, a.have_tol ? a.tol : kJensenTol);
    } else if (a.check == "egf") {
        const unsigned terms = a.have_terms ? static_cast<unsigned>(a.terms) : 40u;
        CotEgfVariant variant = CotEgfVariant::Cos2Bx;
        if (a.variant == "sin2bx")
            variant = CotEgfVariant::Sin2Bx;
        else if (a.variant == "cosbxhalf")
            variant = CotEgfVariant::CosBxHalf;
        else if (!a.variant.empty() && a.variant != "cos2bx")
            return bad_variant("cos2bx, sin2bx, cosbxhalf");
        report = check_cot_egf(a.x, terms, variant, a.have_tol ? a.tol : kEgfTol);
    } else if (a.check == "abel") {
        const unsigned terms = a.have_terms ? static_cast<unsigned>(a.terms) : 40u;
        report = check_abel_integral(a.x, q, terms, a.have_tol ? a.tol : kQuadratureTol);
    } else {
        const unsigned n = a.have_n ? a.n : 10;
        const unsigned terms = a.have_terms ? static_cast<unsigned>(a.terms) : 3u;
        report = stirling_log_factorial(n, terms);
    }

    std::cout << render_reports({report}, fmt);
    return report.passed ? 0 : 1;
}

int run_bench(unsigned upto, OutputFormat fmt) {
    std::vector<BenchRow> rows;
    const auto measure = [&](const std::string& name, auto&& make) {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<Rational> values = make();
        const auto stop = std::chrono::steady_clock::now();
        BenchRow row;
        row.method = name;
        row.upto = upto;
        row.milliseconds = std::chrono::duration<double, std::milli>(stop - start).count();
        row.max_numerator_bits = max_numerator_bits(values);
        rows.push_back(row);
    };

    measure("de-moivre", [&] { return gen_de_moivre(upto, Convention::Minus).values; });
    measure("de-moivre-even", [&]() -> std::vector<Rational> {
        if (upto < 2) return {};
        return gen_de_moivre_even(upto / 2);
    });
    measure("euler-conv", [&] { return gen_euler_convolution(upto).values; });
    measure("genocchi", [&] { return gen_genocchi(upto).values; });
    measure("blissard-diff", [&] { return gen_blissard_difference(upto).values; });
    measure("matrix-inv", [&] { return gen_matrix_inverse(upto).values; });
    measure("egf", [&] { return gen_egf_reciprocal(upto, Convention::Minus).values; });
    measure("det-hammond",
            [&] { return gen_determinant(upto, DeterminantVariant::Hammond).values; });
    measure("det-factorial",
            [&] { return gen_determinant(upto, DeterminantVariant::Factorial).values; });

    bernoulli_prefix(upto, Convention::Minus);
    bernoulli_prefix(upto, Convention::Plus);
    for (const Convention conv : {Convention::Minus, Convention::Plus}) {
        const std::string suffix = std::string("/") + convention_name(conv);
        measure("powersum/closed" + suffix,
                [&] { return build_closed_form(upto, conv).coefficients; });
        measure("powersum/pascal" + suffix,
                [&] { return build_pascal(upto, conv).coefficients; });
        measure("powersum/prouhet" + suffix,
                [&] { return build_prouhet(upto, conv).coefficients; });
    }
    measure("powersum/integral/minus",
            [&] { return build_integral_form(upto).coefficients; });

    std::cout << render_bench(rows, fmt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bernoulli numbers, power-sum polynomials, and analytic cross-checks"};
    app.require_subcommand(1);

    std::string format = "plain";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: plain, json, csv")
            ->envname("BERNLAB_FORMAT")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };

    std::string convention = "minus";
    const auto add_convention = [&](CLI::App* cmd) {
        cmd->add_option("--convention", convention, "Sign convention for index 1")
            ->check(CLI::IsMember({"minus", "plus"}));
    };

    auto* gen = app.add_subcommand("gen", "Generate a Bernoulli sequence");
    std::string gen_method = "de-moivre";
    unsigned gen_upto = 10;
    bool show_symbolic = false;
    gen->add_option("--method", gen_method, "Generator")
        ->check(CLI::IsMember({"de-moivre", "de-moivre-even", "euler-conv", "genocchi",
                               "blissard-diff", "matrix-inv", "egf", "det-hammond",
                               "det-factorial"}));
    gen->add_option("--upto", gen_upto, "Largest index to produce");
    add_convention(gen);
    gen->add_flag("--show-symbolic", show_symbolic,
                  "Also print the defining symbolic polynomials");
    add_format(gen);

    auto* powersum = app.add_subcommand("powersum", "Build or evaluate a power-sum polynomial");
    std::string ps_method = "closed";
    unsigned ps_p = 0;
    long long ps_n = 0;
    powersum->add_option("--p", ps_p, "Exponent")->required();
    powersum->add_option("--method", ps_method, "Build procedure")
        ->check(CLI::IsMember({"closed", "pascal", "prouhet", "integral"}));
    add_convention(powersum);
    auto* ps_n_opt = powersum->add_option("--n", ps_n, "Evaluate the sum up to this bound");
    add_format(powersum);

    auto* verify = app.add_subcommand("verify", "Run all cross-method and identity suites");
    unsigned verify_upto = 20;
    verify->add_option("--upto", verify_upto, "Largest index to cross-check");
    add_format(verify);

    auto* analytic = app.add_subcommand("analytic", "Run one floating-point identity check");
    AnalyticArgs an;
    double an_x = 1.0;
    double an_cutoff = 0.0;
    double an_tol = 0.0;
    analytic->add_option("--check", an.check, "Identity family")
        ->required()
        ->check(CLI::IsMember({"zeta", "plana", "glaisher", "jensen", "egf", "abel",
                               "stirling"}));
    auto* an_n = analytic->add_option("--n", an.n, "Index parameter of the identity");
    analytic->add_option("--x", an_x, "Evaluation point for egf and abel");
    auto* an_terms = analytic->add_option("--terms", an.terms, "Series truncation");
    analytic->add_option("--variant", an.variant, "Identity variant within the family");
    auto* an_cut = analytic->add_option("--cutoff", an_cutoff, "Quadrature upper cutoff");
    auto* an_panels = analytic->add_option("--panels", an.panels, "Quadrature panel count");
    analytic->add_option("--scheme", an.scheme, "Quadrature scheme")
        ->check(CLI::IsMember({"gauss", "simpson"}));
    auto* an_tol_opt = analytic->add_option("--tol", an_tol, "Tolerance override")
                           ->envname("BERNLAB_TOL");
    add_format(analytic);

    auto* bench = app.add_subcommand("bench", "Time every exact construction");
    unsigned bench_upto = 40;
    bench->add_option("--upto", bench_upto, "Largest index / exponent to time");
    add_format(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const OutputFormat fmt = resolve_format(format);
    const Convention conv = convention == "plus" ? Convention::Plus : Convention::Minus;

    try {
        if (gen->parsed()) return run_gen(gen_method, gen_upto, conv, show_symbolic, fmt);
        if (powersum->parsed())
            return run_powersum(ps_method, ps_p, conv, ps_n_opt->count() > 0, ps_n, fmt);
        if (verify->parsed()) return run_verify_cmd(verify_upto, fmt);
        if (analytic->parsed()) {
            an.have_n = an_n->count() > 0;
            an.x = static_cast<long double>(an_x);
            an.have_terms = an_terms->count() > 0;
            an.have_cutoff = an_cut->count() > 0;
            an.cutoff = static_cast<long double>(an_cutoff);
            an.have_panels = an_panels->count() > 0;
            an.have_tol = an_tol_opt->count() > 0;
            an.tol = static_cast<long double>(an_tol);
            return run_analytic(an, fmt);
        }
        if (bench->parsed()) return run_bench(bench_upto, fmt);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
