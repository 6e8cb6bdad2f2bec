#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernlab/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the built binary through the shell, capturing stdout; the
/// prefix slot allows environment assignments.
CommandResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command =
        env_prefix + " " + std::string(BERNLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("plain generation output is byte-stable") {
    const auto first = run_cli("gen --method de-moivre --upto 4");
    CHECK(first.exit_code == 0);
    CHECK(first.output == "1, -1/2, 1/6, 0, -1/30\n");
    const auto second = run_cli("gen --method de-moivre --upto 4");
    CHECK(second.output == first.output);

    const auto plus = run_cli("gen --method de-moivre --upto 4 --convention plus");
    CHECK(plus.output == "1, 1/2, 1/6, 0, -1/30\n");
}

TEST_CASE("every generation method runs from the command line") {
    const std::string expected = "1, -1/2, 1/6, 0, -1/30, 0, 1/42\n";
    for (const char* method :
         {"de-moivre", "de-moivre-even", "euler-conv", "genocchi", "blissard-diff",
          "matrix-inv", "egf", "det-hammond", "det-factorial"}) {
        const auto r = run_cli(std::string("gen --upto 6 --method ") + method);
        CHECK(r.exit_code == 0);
        CHECK(r.output == expected);
    }
}

TEST_CASE("unknown method is a usage error with the valid list") {
    const auto r = run_cli("gen --method nosuch");
    CHECK(r.exit_code == 2);
}

TEST_CASE("polynomial output matches the displayed forms") {
    const auto quadratic = run_cli("powersum --p 2 --convention plus");
    CHECK(quadratic.exit_code == 0);
    CHECK(quadratic.output == "n^3/3 + n^2/2 + n/6\n");

    const auto cubic = run_cli("powersum --p 3");
    CHECK(cubic.output == "n^4/4 - n^3/2 + n^2/4\n");

    const auto value = run_cli("powersum --p 10 --convention plus --n 1000");
    CHECK(value.output == "91409924241424243424241924242500\n");

    const auto trivial = run_cli("powersum --p 0 --n 7");
    CHECK(trivial.output == "7\n");
}

TEST_CASE("integral build rejects the plus convention") {
    const auto r = run_cli("powersum --p 4 --method integral --convention plus");
    CHECK(r.exit_code == 2);
    const auto ok = run_cli("powersum --p 4 --method integral");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("verification sweeps exit zero") {
    const auto r = run_cli("verify --upto 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS  powersum/oracle") != std::string::npos);
    const auto trivial = run_cli("verify --upto 0");
    CHECK(trivial.exit_code == 0);
}

TEST_CASE("json round-trips canonical rationals") {
    const auto r = run_cli("gen --upto 8 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["method"] == "de-moivre");
    CHECK(doc["convention"] == "minus");
    REQUIRE(doc["values"].size() == 9);
    CHECK(doc["values"][8] == "-1/30");
    for (const auto& item : doc["values"]) {
        const auto parsed = bernlab::Rational::parse(item.get<std::string>());
        CHECK(parsed.str() == item.get<std::string>());
    }
}

TEST_CASE("csv quotes rational fields") {
    const auto seq = run_cli("gen --upto 2 --format csv");
    CHECK(seq.output == "index,value\n0,\"1\"\n1,\"-1/2\"\n2,\"1/6\"\n");

    const auto sum = run_cli("powersum --p 2 --n 5 --format csv");
    CHECK(sum.output == "power,convention,n,value\n2,minus,5,\"30\"\n");
}

TEST_CASE("environment variables supply defaults") {
    const auto json_env = run_cli("gen --upto 2", "BERNLAB_FORMAT=json");
    CHECK(nlohmann::json::parse(json_env.output)["values"][2] == "1/6");

    const auto flag_wins = run_cli("gen --upto 2 --format plain", "BERNLAB_FORMAT=json");
    CHECK(flag_wins.output == "1, -1/2, 1/6\n");

    const auto strict = run_cli("analytic --check zeta", "BERNLAB_TOL=1e-30");
    CHECK(strict.exit_code == 1);
}

TEST_CASE("analytic subcommand exit codes") {
    const auto pass = run_cli("analytic --check zeta");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output.find("PASS") == 0);

    const auto domain = run_cli("analytic --check egf --x 5.0");
    CHECK(domain.exit_code == 2);

    const auto missing = run_cli("analytic");
    CHECK(missing.exit_code == 2);

    const auto bad_variant = run_cli("analytic --check plana --variant exp-minus");
    CHECK(bad_variant.exit_code == 2);

    const auto failed = run_cli("analytic --check plana --n 2 --scheme simpson --panels 8");
    CHECK(failed.exit_code == 1);
}

TEST_CASE("symbolic display") {
    const auto r = run_cli("gen --upto 2 --show-symbolic");
    CHECK(r.output ==
          "1, -1/2, 1/6\n"
          "p=0: 1 + 1*A\n"
          "p=1: 1 + 2*A + 1*A^2\n"
          "p=2: 1 + 3*A + 3*A^2 + 1*A^3\n");

    const auto json_doc = run_cli("gen --upto 2 --show-symbolic --format json");
    const auto doc = nlohmann::json::parse(json_doc.output);
    REQUIRE(doc.contains("symbolic"));
    CHECK(doc["symbolic"].size() == 3);
}

TEST_CASE("bench emits one row per construction") {
    const auto csv = run_cli("bench --upto 8 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("method,upto,milliseconds,max_numerator_bits") == 0);
    CHECK(csv.output.find("de-moivre") != std::string::npos);
    CHECK(csv.output.find("powersum/integral/minus") != std::string::npos);

    const auto tiny = run_cli("bench --upto 0");
    CHECK(tiny.exit_code == 0);
}

TEST_CASE("help and missing subcommand") {
    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    const auto none = run_cli("");
    CHECK(none.exit_code == 2);
}
