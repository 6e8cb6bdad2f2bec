#include "bernlab/io.hpp"

#include <cstdio>
#include <sstream>

namespace bernlab {

namespace {

using nlohmann::ordered_json;

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string float_str(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return buf;
}

double to_double(long double v) { return static_cast<double>(v); }

const char* pass_str(bool passed) { return passed ? "PASS" : "FAIL"; }

std::string plain_report_line(const CheckReport& r) {
    std::string line = pass_str(r.passed);
    line += "  ";
    line += r.identity;
    line += "  numeric=" + float_str(r.numeric_value);
    line += "  target=" + float_str(r.target);
    if (r.exact_value) line += "  exact=" + r.exact_value->str();
    line += "  abs_error=" + float_str(r.abs_error);
    line += "  rel_error=" + float_str(r.rel_error);
    line += "  tolerance=" + float_str(r.tolerance);
    line += r.relative ? " (relative)" : " (absolute)";
    if (!r.converged) line += "  NOT CONVERGED";
    if (!r.note.empty()) line += "  [" + r.note + "]";
    return line;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "plain") return OutputFormat::Plain;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

const char* format_name(OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Plain: return "plain";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "plain";
}

ordered_json to_json(const BernoulliSequence& seq) {
    ordered_json values = ordered_json::array();
    for (const auto& v : seq.values) values.push_back(v.str());
    return ordered_json{{"method", seq.method},
                        {"convention", convention_name(seq.convention)},
                        {"values", values}};
}

ordered_json to_json(const PowerSumPolynomial& poly) {
    ordered_json coefficients = ordered_json::array();
    for (const auto& c : poly.coefficients) coefficients.push_back(c.str());
    return ordered_json{{"power", poly.power},
                        {"convention", convention_name(poly.convention)},
                        {"coefficients", coefficients}};
}

ordered_json to_json(const CheckReport& report) {
    return ordered_json{
        {"identity", report.identity},
        {"exact_value", report.exact_value ? ordered_json(report.exact_value->str())
                                           : ordered_json(nullptr)},
        {"target", to_double(report.target)},
        {"numeric_value", to_double(report.numeric_value)},
        {"abs_error", to_double(report.abs_error)},
        {"rel_error", to_double(report.rel_error)},
        {"tolerance", to_double(report.tolerance)},
        {"relative", report.relative},
        {"converged", report.converged},
        {"passed", report.passed},
        {"note", report.note}};
}

ordered_json to_json(const SuiteResult& result) {
    return ordered_json{{"suite", result.suite},
                        {"checks", result.checks},
                        {"passed", result.passed},
                        {"failure", result.failure}};
}

ordered_json to_json(const BenchRow& row) {
    return ordered_json{{"method", row.method},
                        {"upto", row.upto},
                        {"milliseconds", row.milliseconds},
                        {"max_numerator_bits", row.max_numerator_bits}};
}

std::string render_sequence(const BernoulliSequence& seq, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: return to_json(seq).dump(2) + "\n";
        case OutputFormat::Csv: {
            std::string out = "index,value\n";
            for (std::size_t i = 0; i < seq.values.size(); ++i)
                out += std::to_string(i) + "," + csv_quote(seq.values[i].str()) + "\n";
            return out;
        }
        case OutputFormat::Plain: {
            std::string out;
            for (std::size_t i = 0; i < seq.values.size(); ++i) {
                if (i > 0) out += ", ";
                out += seq.values[i].str();
            }
            out += "\n";
            return out;
        }
    }
    return {};
}

std::string render_polynomial(const PowerSumPolynomial& poly, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: return to_json(poly).dump(2) + "\n";
        case OutputFormat::Csv: {
            std::string out = "power,index,coefficient\n";
            for (std::size_t i = 0; i < poly.coefficients.size(); ++i)
                out += std::to_string(poly.power) + "," + std::to_string(i) + "," +
                       csv_quote(poly.coefficients[i].str()) + "\n";
            return out;
        }
        case OutputFormat::Plain: return to_string(poly) + "\n";
    }
    return {};
}

std::string render_evaluated(const EvaluatedSum& result, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json:
            return ordered_json{{"power", result.power},
                                {"convention", convention_name(result.convention)},
                                {"n", result.n.str()},
                                {"value", result.value.str()}}
                       .dump(2) +
                   "\n";
        case OutputFormat::Csv:
            return "power,convention,n,value\n" + std::to_string(result.power) + "," +
                   convention_name(result.convention) + "," + result.n.str() + "," +
                   csv_quote(result.value.str()) + "\n";
        case OutputFormat::Plain: return result.value.str() + "\n";
    }
    return {};
}

std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out =
                "identity,exact_value,target,numeric_value,abs_error,rel_error,"
                "tolerance,relative,converged,passed,note\n";
            for (const auto& r : reports) {
                out += csv_quote(r.identity) + ",";
                out += (r.exact_value ? csv_quote(r.exact_value->str()) : std::string()) + ",";
                out += float_str(r.target) + "," + float_str(r.numeric_value) + ",";
                out += float_str(r.abs_error) + "," + float_str(r.rel_error) + ",";
                out += float_str(r.tolerance) + ",";
                out += std::string(r.relative ? "true" : "false") + ",";
                out += std::string(r.converged ? "true" : "false") + ",";
                out += std::string(r.passed ? "true" : "false") + ",";
                out += csv_quote(r.note) + "\n";
            }
            return out;
        }
        case OutputFormat::Plain: {
            std::string out;
            for (const auto& r : reports) out += plain_report_line(r) + "\n";
            return out;
        }
    }
    return {};
}

std::string render_suites(const std::vector<SuiteResult>& suites, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& s : suites) arr.push_back(to_json(s));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = "suite,checks,passed,failure\n";
            for (const auto& s : suites)
                out += csv_quote(s.suite) + "," + std::to_string(s.checks) + "," +
                       (s.passed ? "true" : "false") + "," + csv_quote(s.failure) + "\n";
            return out;
        }
        case OutputFormat::Plain: {
            std::string out;
            for (const auto& s : suites) {
                std::ostringstream line;
                line << pass_str(s.passed) << "  " << s.suite << "  (" << s.checks
                     << " checks)";
                if (!s.failure.empty()) line << "  " << s.failure;
                out += line.str() + "\n";
            }
            return out;
        }
    }
    return {};
}

std::string render_bench(const std::vector<BenchRow>& rows, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = "method,upto,milliseconds,max_numerator_bits\n";
            for (const auto& r : rows) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", r.milliseconds);
                out += csv_quote(r.method) + "," + std::to_string(r.upto) + "," + buf +
                       "," + std::to_string(r.max_numerator_bits) + "\n";
            }
            return out;
        }
        case OutputFormat::Plain: {
            std::string out;
            for (const auto& r : rows) {
                char buf[128];
                std::snprintf(buf, sizeof buf, "%-16s upto=%-4u %10.3f ms   max bits %zu",
                              r.method.c_str(), r.upto, r.milliseconds,
                              r.max_numerator_bits);
                out += std::string(buf) + "\n";
            }
            return out;
        }
    }
    return {};
}

}  // namespace bernlab
