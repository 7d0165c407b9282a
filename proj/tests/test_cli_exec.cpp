#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the installed CLI through the shell; stdin is fed with printf so the
// JSON payloads (which never contain single quotes) can be quoted directly.
RunResult run_cli(const std::string& args, const std::string& input = "",
                  const std::string& env = "") {
    std::string cmd;
    if (!input.empty()) {
        cmd += "printf '%s' '" + input + "' | ";
    }
    if (!env.empty()) {
        cmd += env + " ";
    }
    cmd += std::string(FUTAKI_CLI_PATH) + " " + args + " 2>/dev/null";

    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kAnchorSpec =
    R"({"kind":"polytope","n":2,"vertices":[[1,0],[3,0],[0,3],[0,1]],"weights":[1,0]})";

const char* kCubicRequest =
    R"({"model":"F_Delta","params":[1,-1,0],"numbers":{)"
    R"("p0":{"b":1,"KM_E2":-1},"p1":{"b":1,"KM_E2":-2},"p2":{"b":1,"KM_E2":-3}}})";

const char* kResolutionData =
    R"({"n":2,"Ln":1,"FXL":0,"u_bar":0,"points":[{"label":"p","u_p":1,"b_p":1,)"
    R"("KM_Ep_nminus1":-1,"Ep_n":-1}]})";

}  // namespace

TEST_CASE("compute emits byte-exact JSON for a trivial spec") {
    const auto r = run_cli("compute", R"({"kind":"ambient","d":1,"weights":[1,-1]})");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\n  \"F0\": \"0\",\n  \"F1\": \"0\",\n  \"chi_poly\": [\n    \"1\",\n"
          "    \"1\"\n  ],\n  \"weight_poly\": []\n}\n");
}

TEST_CASE("compute reproduces the anchor value") {
    const auto r = run_cli("compute", kAnchorSpec);
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("F0") == "13/12");
    CHECK(doc.at("F1") == "1/24");
    CHECK(doc.at("chi_poly") == nlohmann::json::parse(R"(["1","4","4"])"));
    CHECK(doc.at("weight_poly") == nlohmann::json::parse(R"(["0","7/6","9/2","13/3"])"));
    CHECK_FALSE(doc.contains("deeper_terms"));

    const auto deep = run_cli("compute --depth 2", kAnchorSpec);
    REQUIRE(deep.exit_code == 0);
    CHECK(nlohmann::json::parse(deep.output).at("deeper_terms").size() == 2);
}

TEST_CASE("identical runs produce identical bytes") {
    const auto a = run_cli("compute", kAnchorSpec);
    const auto b = run_cli("compute", kAnchorSpec);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("text format") {
    const auto r = run_cli("compute --format text", kAnchorSpec);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("F0 = 13/12\nF1 = 1/24\n", 0) == 0);
}

TEST_CASE("cubic subcommand end to end") {
    const auto r = run_cli("cubic", kCubicRequest);
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("verdict") == "UNSTABLE");
    CHECK(doc.at("coefficient") == "-1/2");
    CHECK(doc.at("order") == "r^-2");
    CHECK(doc.at("witness_alpha") == nlohmann::json::parse("[1,-1,0]"));
}

TEST_CASE("expand subcommand and depth fallbacks") {
    // Default depth is the dimension, which needs delta_u_p and KX data.
    const auto full = run_cli("expand", kResolutionData);
    CHECK(full.exit_code == 2);

    const auto shallow = run_cli("expand --depth 1", kResolutionData);
    REQUIRE(shallow.exit_code == 0);
    const auto doc = nlohmann::json::parse(shallow.output);
    CHECK(doc.at("corollary_leading") == "1");
    CHECK(doc.at("truncation") == "r^-1");
    REQUIRE(doc.at("terms").size() == 2);
    CHECK(doc.at("terms")[1].at("coefficient") == "1");

    auto data = nlohmann::json::parse(kResolutionData);
    data["KX_Lnminus1"] = 0;
    data["points"][0]["delta_u_p"] = 0;
    const auto complete = run_cli("expand", data.dump());
    REQUIRE(complete.exit_code == 0);
    const auto deep = nlohmann::json::parse(complete.output);
    CHECK(deep.at("truncation") == "r^-2");
    REQUIRE(deep.at("terms").size() == 3);
    CHECK(deep.at("terms")[2].at("requires") ==
          nlohmann::json::parse(R"(["KX_Lnminus1","delta_u_p"])"));
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("compute", "{nope").exit_code == 2);
    CHECK(run_cli("compute", R"({"kind":"nowhere"})").exit_code == 2);
    CHECK(run_cli("compute --input /nonexistent/spec.json").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);            // a subcommand is required
    CHECK(run_cli("compute --depth=-1", kAnchorSpec).exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify --suite oracles", "", "FUTAKI_ENUM_CAP=abc").exit_code == 2);
}

TEST_CASE("engine failures exit with code 3") {
    // Section counts of a degree-7 curve in the plane are not polynomial
    // over the sampled range, so interpolation rejects the data.
    const auto r = run_cli(
        "compute",
        R"({"kind":"hypersurface","ambient":{"d":2,"weights":[0,0,0]},"degree":7,"defining_weight":0})");
    CHECK(r.exit_code == 3);
}

TEST_CASE("a strangled enumeration cap fails the oracle suite") {
    const auto r = run_cli("verify --suite oracles", "", "FUTAKI_ENUM_CAP=10");
    CHECK(r.exit_code == 1);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("passed") == false);
    CHECK(doc.at("suite") == "oracles");
    REQUIRE(doc.at("checks").size() >= 1);
    CHECK(doc.at("checks")[0].at("passed") == false);
}

TEST_CASE("verify text format emits one line per check") {
    const auto r = run_cli("verify --suite invariance --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS]") != std::string::npos);
    CHECK(r.output.find("suite invariance: PASS") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("help is available and exits cleanly") {
    const auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("compute") != std::string::npos);
    CHECK(r.output.find("verify") != std::string::npos);
}
