#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernlab/bernoulli.hpp"

using namespace bernlab;

namespace {

const std::vector<Rational>& frozen_minus() {
    static const std::vector<Rational> values = {
        Rational(1),        Rational(-1, 2),  Rational(1, 6),  Rational(0),
        Rational(-1, 30),   Rational(0),      Rational(1, 42), Rational(0),
        Rational(-1, 30),   Rational(0),      Rational(5, 66), Rational(0),
        Rational(-691, 2730)};
    return values;
}

}  // namespace

TEST_CASE("reference values through index 12") {
    const auto seq = gen_de_moivre(12, Convention::Minus);
    CHECK(seq.method == "de-moivre");
    CHECK(seq.convention == Convention::Minus);
    REQUIRE(seq.values.size() == 13);
    for (std::size_t k = 0; k < 13; ++k) CHECK(seq.values[k] == frozen_minus()[k]);
}

TEST_CASE("larger reference values") {
    const auto b = gen_de_moivre(40, Convention::Minus).values;
    CHECK(b[14] == Rational(7, 6));
    CHECK(b[16] == Rational(-3617, 510));
    CHECK(b[18] == Rational(43867, 798));
    CHECK(b[20] == Rational(-174611, 330));
    CHECK(b[30] == Rational(BigInt("8615841276005"), BigInt(14322)));
    CHECK(b[40] == Rational(BigInt("-261082718496449122051"), BigInt(13530)));
}

TEST_CASE("plus convention differs only at index 1") {
    const auto minus = gen_de_moivre(12, Convention::Minus).values;
    const auto plus = gen_de_moivre(12, Convention::Plus).values;
    CHECK(plus[1] == Rational(1, 2));
    for (std::size_t k = 0; k < minus.size(); ++k) {
        if (k == 1) continue;
        CHECK(plus[k] == minus[k]);
    }
}

TEST_CASE("every generator reproduces the reference prefix") {
    const auto reference = gen_de_moivre(16, Convention::Minus).values;

    const auto check_seq = [&](const BernoulliSequence& seq, const char* method) {
        CHECK(seq.method == method);
        REQUIRE(seq.values.size() == reference.size());
        for (std::size_t k = 0; k < reference.size(); ++k)
            CHECK(seq.values[k] == reference[k]);
    };
    check_seq(gen_euler_convolution(16), "euler-conv");
    check_seq(gen_genocchi(16), "genocchi");
    check_seq(gen_blissard_difference(16), "blissard-diff");
    check_seq(gen_matrix_inverse(16), "matrix-inv");
    check_seq(gen_egf_reciprocal(16, Convention::Minus), "egf");
    check_seq(gen_determinant(16, DeterminantVariant::Hammond), "det-hammond");
    check_seq(gen_determinant(16, DeterminantVariant::Factorial), "det-factorial");
}

TEST_CASE("even-index recurrence") {
    const auto reference = gen_de_moivre(16, Convention::Minus).values;
    const auto even = gen_de_moivre_even(8);
    REQUIRE(even.size() == 8);
    for (std::size_t m = 1; m <= 8; ++m) CHECK(even[m - 1] == reference[2 * m]);
    CHECK_THROWS_AS(gen_de_moivre_even(0), std::invalid_argument);
}

TEST_CASE("genocchi closed form is independent of the free parameter") {
    const auto reference = gen_de_moivre(8, Convention::Minus).values;
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned m = n; m <= n + 6; ++m)
            CHECK(genocchi_bernoulli(n, m) == reference[n]);
    CHECK_THROWS_AS(genocchi_bernoulli(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(genocchi_bernoulli(4, 3), std::invalid_argument);
}

TEST_CASE("plus-convention egf expansion") {
    const auto plus = gen_egf_reciprocal(12, Convention::Plus);
    CHECK(plus.convention == Convention::Plus);
    const auto expected = gen_de_moivre(12, Convention::Plus).values;
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(plus.values[k] == expected[k]);
}

TEST_CASE("convention conversion flips odd entries and round-trips") {
    const auto minus = gen_de_moivre(10, Convention::Minus);
    const auto plus = convert_convention(minus);
    CHECK(plus.convention == Convention::Plus);
    CHECK(plus.values[1] == Rational(1, 2));
    const auto back = convert_convention(plus);
    CHECK(back.convention == Convention::Minus);
    for (std::size_t k = 0; k < minus.values.size(); ++k)
        CHECK(back.values[k] == minus.values[k]);
}

TEST_CASE("validate rejects corrupted sequences") {
    auto seq = gen_de_moivre(10, Convention::Minus);
    CHECK_NOTHROW(validate(seq));

    auto broken_first = seq;
    broken_first.values[0] = Rational(2);
    CHECK_THROWS_AS(validate(broken_first), std::domain_error);

    auto broken_odd = seq;
    broken_odd.values[5] = Rational(1, 7);
    CHECK_THROWS_AS(validate(broken_odd), std::domain_error);

    auto broken_sign = seq;
    broken_sign.values[4] = Rational(1, 30);
    CHECK_THROWS_AS(validate(broken_sign), std::domain_error);

    auto broken_index1 = seq;
    broken_index1.values[1] = Rational(1, 2);
    CHECK_THROWS_AS(validate(broken_index1), std::domain_error);
}

TEST_CASE("sign alternation of even entries") {
    const auto b = gen_de_moivre(40, Convention::Minus).values;
    for (unsigned k = 1; k <= 20; ++k) {
        const Rational value = k % 2 == 1 ? b[2 * k] : -b[2 * k];
        CHECK(value.sign() == 1);
    }
}

TEST_CASE("prefix cache returns consistent copies") {
    const auto a = bernoulli_prefix(6, Convention::Minus);
    const auto b = bernoulli_prefix(12, Convention::Minus);
    const auto c = bernoulli_prefix(6, Convention::Minus);
    REQUIRE(a.size() == 7);
    REQUIRE(b.size() == 13);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k] == b[k]);
        CHECK(a[k] == c[k]);
    }
    const auto plus = bernoulli_prefix(6, Convention::Plus);
    CHECK(plus[1] == Rational(1, 2));
}
