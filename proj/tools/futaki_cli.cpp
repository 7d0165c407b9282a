#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "futaki/adiabatic.hpp"
#include "futaki/characters.hpp"
#include "futaki/cubic.hpp"
#include "futaki/errors.hpp"
#include "futaki/futaki.hpp"
#include "futaki/io.hpp"
#include "futaki/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitEngineError = 3;

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw futaki::invalid_input("cannot open input file '" + path + "'");
        }
        buffer << in.rdbuf();
    }
    return buffer.str();
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw futaki::invalid_input(std::string("JSON parse error: ") + e.what());
    }
}

std::uint64_t enum_cap_from_env() {
    const char* raw = std::getenv("FUTAKI_ENUM_CAP");
    if (raw == nullptr || *raw == '\0') {
        return futaki::kDefaultEnumCap;
    }
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos) {
        throw futaki::invalid_input("FUTAKI_ENUM_CAP must be a nonnegative integer, got '" +
                                    text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw futaki::invalid_input("FUTAKI_ENUM_CAP is out of range: '" + text + "'");
    }
}

void emit(const std::string& format, const nlohmann::json& doc, const std::string& text) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int run_compute(const std::string& input, const std::string& format,
                const std::optional<int>& depth) {
    const futaki::VarietySpec spec = futaki::variety_spec_from_json(parse_json(read_input(input)));
    const int n = futaki::dimension(spec);
    const futaki::FutakiResult result = futaki::futaki(spec, n, depth.value_or(0));
    emit(format, futaki::futaki_result_to_json(result, depth.has_value()),
         futaki::futaki_result_to_text(result, depth.has_value()));
    return kExitOk;
}

int run_expand(const std::string& input, const std::string& format,
               const std::optional<int>& depth) {
    const futaki::ResolutionData data =
        futaki::resolution_data_from_json(parse_json(read_input(input)));
    const futaki::AsymptoticExpansion expansion =
        futaki::resolution_expansion(data, depth.value_or(data.n));
    const futaki::Rational corollary = futaki::corollary_leading(data);
    emit(format, futaki::expansion_to_json(expansion, corollary, data.n),
         futaki::expansion_to_text(expansion, corollary, data.n));
    return kExitOk;
}

int run_cubic(const std::string& input, const std::string& format) {
    const futaki::CubicRequest request =
        futaki::cubic_request_from_json(parse_json(read_input(input)));
    const futaki::Report report =
        futaki::instability_report(request.model, request.numbers, request.params);
    emit(format, futaki::report_to_json(report), futaki::report_to_text(report));
    return kExitOk;
}

int run_verify(const std::string& suite_name, const std::string& format) {
    const futaki::Suite suite = futaki::suite_from_name(suite_name);
    const std::vector<futaki::CheckResult> results = futaki::run_suite(suite, enum_cap_from_env());
    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
    }

    nlohmann::json doc;
    doc["suite"] = suite_name;
    doc["passed"] = all_passed;
    auto checks = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json c;
        c["name"] = r.name;
        c["passed"] = r.passed;
        c["detail"] = r.detail;
        checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);

    std::ostringstream text;
    for (const auto& r : results) {
        text << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    }
    text << "suite " << suite_name << ": " << (all_passed ? "PASS" : "FAIL") << " ("
         << results.size() << " checks)\n";

    emit(format, doc, text.str());
    return all_passed ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Futaki invariants, adiabatic expansions, and cubic-threefold "
                 "instability reports"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"json", "text"});

    std::string compute_input = "-";
    std::string compute_format = "json";
    std::optional<int> compute_depth;
    auto* compute = app.add_subcommand(
        "compute", "Futaki invariant of a variety spec (ambient, hypersurface, or polytope)");
    compute->add_option("--input", compute_input, "Spec JSON file, or - for stdin");
    compute->add_option("--format", compute_format, "Output format")->check(format_check);
    compute->add_option("--depth", compute_depth,
                        "Also report this many expansion terms below k^0")
        ->check(CLI::NonNegativeNumber);

    std::string expand_input = "-";
    std::string expand_format = "json";
    std::optional<int> expand_depth;
    auto* expand = app.add_subcommand(
        "expand", "Adiabatic expansion of F(M, L_r) from resolution data");
    expand->add_option("--input", expand_input, "ResolutionData JSON file, or - for stdin");
    expand->add_option("--format", expand_format, "Output format")->check(format_check);
    expand->add_option("--depth", expand_depth,
                       "Truncate at order r^-depth (default: the dimension n)")
        ->check(CLI::NonNegativeNumber);

    std::string cubic_input = "-";
    std::string cubic_format = "json";
    auto* cubic = app.add_subcommand(
        "cubic", "Instability report for a built-in cubic threefold resolution");
    cubic->add_option("--input", cubic_input, "Cubic request JSON file, or - for stdin");
    cubic->add_option("--format", cubic_format, "Output format")->check(format_check);

    std::string verify_suite = "all";
    std::string verify_format = "json";
    auto* verify = app.add_subcommand("verify", "Run the built-in verification suites");
    verify->add_option("--suite", verify_suite,
                       "oracles, invariance, decay, calibration, cubics, or all");
    verify->add_option("--format", verify_format, "Output format")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (compute->parsed()) {
            return run_compute(compute_input, compute_format, compute_depth);
        }
        if (expand->parsed()) {
            return run_expand(expand_input, expand_format, expand_depth);
        }
        if (cubic->parsed()) {
            return run_cubic(cubic_input, cubic_format);
        }
        return run_verify(verify_suite, verify_format);
    } catch (const futaki::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const futaki::incomplete_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const futaki::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngineError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitEngineError;
    }
}
