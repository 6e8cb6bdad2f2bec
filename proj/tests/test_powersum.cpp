#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernlab/powersum.hpp"

using namespace bernlab;

TEST_CASE("hand-checked cubic and quadratic closed forms") {
    const auto t1 = build_closed_form(1, Convention::Plus);
    CHECK(t1.coefficients == Poly{Rational(0), Rational(1, 2), Rational(1, 2)});
    CHECK(to_string(t1) == "n^2/2 + n/2");

    const auto t2 = build_closed_form(2, Convention::Plus);
    CHECK(t2.coefficients ==
          Poly{Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)});
    CHECK(to_string(t2) == "n^3/3 + n^2/2 + n/6");

    const auto s3 = build_closed_form(3, Convention::Minus);
    CHECK(s3.coefficients ==
          Poly{Rational(0), Rational(0), Rational(1, 4), Rational(-1, 2), Rational(1, 4)});
    CHECK(to_string(s3) == "n^4/4 - n^3/2 + n^2/4");

    const auto s0 = build_closed_form(0, Convention::Minus);
    CHECK(s0.coefficients == Poly{Rational(0), Rational(1)});
    CHECK(to_string(s0) == "n");
}

TEST_CASE("the three build routes agree for both conventions") {
    for (unsigned p = 0; p <= 12; ++p) {
        for (const Convention conv : {Convention::Minus, Convention::Plus}) {
            const auto closed = build(p, conv, BuildMethod::ClosedForm);
            const auto pascal = build(p, conv, BuildMethod::PascalSystem);
            const auto prouhet = build(p, conv, BuildMethod::ProuhetIntegrate);
            CHECK(closed.coefficients == pascal.coefficients);
            CHECK(closed.coefficients == prouhet.coefficients);
            CHECK(closed.power == p);
            CHECK(closed.convention == conv);
        }
        const auto integral = build_integral_form(p);
        CHECK(integral.coefficients == build_closed_form(p, Convention::Minus).coefficients);
    }
}

TEST_CASE("evaluation matches the brute-force definition") {
    for (unsigned p = 0; p <= 8; ++p) {
        for (const Convention conv : {Convention::Minus, Convention::Plus}) {
            const auto poly = build_closed_form(p, conv);
            for (unsigned n = 0; n <= 40; ++n)
                CHECK(evaluate(poly, BigInt(n)) == brute_force_sum(p, n, conv));
        }
    }
}

TEST_CASE("the thousand-integers showcase value") {
    const auto t10 = build_closed_form(10, Convention::Plus);
    const Rational value = evaluate(t10, BigInt(1000));
    CHECK(value == Rational(BigInt("91409924241424243424241924242500")));
    CHECK(value == brute_force_sum(10, 1000, Convention::Plus));
}

TEST_CASE("prouhet integration fits the generating constants") {
    for (const Convention conv : {Convention::Minus, Convention::Plus}) {
        std::vector<Rational> fitted;
        build_prouhet(10, conv, &fitted);
        const auto expected = bernoulli_prefix(10, conv);
        REQUIRE(fitted.size() == expected.size());
        for (std::size_t k = 0; k < fitted.size(); ++k) CHECK(fitted[k] == expected[k]);
    }
}

TEST_CASE("integral route is minus-only by contract") {
    CHECK(build_integral_form(4).convention == Convention::Minus);
}

TEST_CASE("structure validation catches tampering") {
    auto poly = build_closed_form(4, Convention::Minus);
    CHECK_NOTHROW(validate(poly));

    auto bad_constant = poly;
    bad_constant.coefficients[0] = Rational(1, 7);
    CHECK_THROWS_AS(validate(bad_constant), std::domain_error);

    auto bad_leading = poly;
    bad_leading.coefficients.back() = Rational(1);
    CHECK_THROWS_AS(validate(bad_leading), std::domain_error);

    auto bad_degree = poly;
    bad_degree.coefficients.push_back(Rational(1, 9));
    CHECK_THROWS_AS(validate(bad_degree), std::domain_error);
}

TEST_CASE("parity decomposition") {
    for (unsigned p = 1; p <= 10; ++p) {
        const auto report = parity_decompose(build_closed_form(p, Convention::Minus));
        CHECK(report.power == p);
        CHECK(report.passed);
        CHECK(report.violations.empty());
        CHECK(report.parity == (p + 1) % 2);
    }
    CHECK_THROWS_AS(parity_decompose(build_closed_form(0, Convention::Minus)),
                    std::invalid_argument);
    CHECK_THROWS_AS(parity_decompose(build_closed_form(3, Convention::Plus)),
                    std::invalid_argument);
}

TEST_CASE("negative arguments stay exact") {
    const auto s4 = build_closed_form(4, Convention::Minus);
    // Downward recurrence: S(n) - S(n-1) = (n-1)^4 continued below zero.
    CHECK(evaluate(s4, BigInt(0)) - evaluate(s4, BigInt(-1)) == Rational(1));
    CHECK(evaluate(s4, BigInt(-1)) - evaluate(s4, BigInt(-2)) == Rational(16));
    const auto t3 = build_closed_form(3, Convention::Plus);
    CHECK(evaluate(t3, BigInt(-1)) == Rational(0));
}
