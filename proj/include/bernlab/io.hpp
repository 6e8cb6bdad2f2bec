#pragma once

#include "bernlab/analytic.hpp"
#include "bernlab/bernoulli.hpp"
#include "bernlab/powersum.hpp"
#include "bernlab/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bernlab {

enum class OutputFormat { Plain, Json, Csv };

/// Parses "plain" | "json" | "csv"; nullopt on anything else.
std::optional<OutputFormat> parse_format(std::string_view text);

const char* format_name(OutputFormat fmt);

/// One line of the benchmark table.
struct BenchRow {
    std::string method;
    unsigned upto = 0;
    double milliseconds = 0.0;
    std::size_t max_numerator_bits = 0;
};

nlohmann::ordered_json to_json(const BernoulliSequence& seq);
nlohmann::ordered_json to_json(const PowerSumPolynomial& poly);
nlohmann::ordered_json to_json(const CheckReport& report);
nlohmann::ordered_json to_json(const SuiteResult& result);
nlohmann::ordered_json to_json(const BenchRow& row);

/// Renderers return complete output including the trailing newline.
/// Plain sequence output is the comma-separated canonical values,
/// e.g. "1, -1/2, 1/6, 0, -1/30".
std::string render_sequence(const BernoulliSequence& seq, OutputFormat fmt);
std::string render_polynomial(const PowerSumPolynomial& poly, OutputFormat fmt);

/// Rendering of one exact evaluation result with its inputs.
struct EvaluatedSum {
    unsigned power = 0;
    Convention convention = Convention::Minus;
    BigInt n;
    Rational value;
};

std::string render_evaluated(const EvaluatedSum& result, OutputFormat fmt);
std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat fmt);
std::string render_suites(const std::vector<SuiteResult>& suites, OutputFormat fmt);
std::string render_bench(const std::vector<BenchRow>& rows, OutputFormat fmt);

}  // namespace bernlab
