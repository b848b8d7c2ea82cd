#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbivol/cli.hpp"

using namespace orbivol;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "orbivol");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json without_timing(const std::string& text) {
    Json j = Json::parse(text);
    j.erase("timing");
    return j;
}

std::string golden_path(const std::string& name) { return std::string(ORBIVOL_TEST_DATA_DIR) + "/golden/" + name + ".json"; }

// Runs the command twice, checks determinism, and compares with the stored
// golden report (timing excluded). ORBIVOL_UPDATE_GOLDEN=1 rewrites the file.
void check_golden(const std::string& name, std::vector<std::string> args, int expected_code = cli::kExitOk) {
    args.insert(args.begin(), {"--digits", "30", "--output", "json"});
    Outcome first = invoke(args);
    Outcome second = invoke(args);
    ASSERT_EQ(first.code, expected_code) << first.err;
    ASSERT_EQ(second.code, expected_code);
    Json a = without_timing(first.out), b = without_timing(second.out);
    EXPECT_EQ(a.dump(), b.dump()) << "non-deterministic output for " << name;
    EXPECT_EQ(a["schema"], "orbivol-report/1");
    const std::string path = golden_path(name);
    const char* update = std::getenv("ORBIVOL_UPDATE_GOLDEN");
    if (update != nullptr && std::string(update) == "1") {
        std::ofstream(path) << a.dump(2) << "\n";
        return;
    }
    std::ifstream in(path);
    ASSERT_TRUE(in) << "missing golden file " << path;
    Json expected = Json::parse(in);
    EXPECT_EQ(a.dump(2), expected.dump(2)) << name;
}

std::string result_value(const Json& report, const std::string& label) {
    for (const auto& r : report["results"])
        if (r["label"] == label) return r["value"].get<std::string>();
    return {};
}

}  // namespace

TEST(Golden, Lob) { check_golden("lob", {"lob", "--order", "3", "--omega", "pi/5"}); }
TEST(Golden, LobIntegral) { check_golden("lob_integral", {"lob", "--order", "3", "--omega", "pi/5", "--method", "integral"}); }
TEST(Golden, Prism) { check_golden("prism", {"prism", "--alpha", "2pi/5"}); }
TEST(Golden, PrismPolytope) { check_golden("prism_p2", {"prism", "--polytope", "P2"}); }
TEST(Golden, PrismClosedForms) { check_golden("prism_closed_forms", {"prism", "--closed-forms"}); }
TEST(Golden, CoxeterSymbol) { check_golden("coxeter_symbol", {"coxeter", "--symbol", "[5,3,3,3,4]", "--check", "signature"}); }
TEST(Golden, CoxeterDashed) { check_golden("coxeter_dashed", {"coxeter", "--symbol", "[5,3,3,3,3]", "--dashed", "5,6"}); }
TEST(Golden, CoxeterPrism) { check_golden("coxeter_p1", {"coxeter", "--prism", "P1"}); }
TEST(Golden, ZetaDisc) { check_golden("zeta_disc", {"zeta", "--disc", "5", "--s", "2"}); }
TEST(Golden, ZetaField) { check_golden("zeta_field", {"--cutoff", "100000", "zeta", "--field", "l2", "--s", "3"}); }
TEST(Golden, ZetaRelative) { check_golden("zeta_over", {"--cutoff", "100000", "zeta", "--field", "l0", "--over", "k0"}); }
TEST(Golden, ZetaBeta) { check_golden("zeta_beta", {"--cutoff", "100000", "zeta", "--field", "k0", "--beta", "-1,2"}); }
TEST(Golden, ZetaPoly) { check_golden("zeta_poly", {"zeta", "--poly", "1,0,-1,0,-1", "--mod-p", "5"}); }
TEST(Golden, Covolume) { check_golden("covolume", {"--cutoff", "100000", "covolume", "--case", "475"}); }
TEST(Golden, Bounds) { check_golden("bounds", {"bounds", "--eq", "37"}); }
TEST(Golden, BoundsClassNumber) {
    check_golden("bounds_31", {"bounds", "--eq", "31", "--dk", "5", "--dl", "475", "--class-number", "1"});
}
TEST(Golden, Verify) { check_golden("verify", {"--cutoff", "1000000", "verify", "--identity", "gamma2", "--target", "11"}); }
TEST(Golden, Table1) { check_golden("table1", {"--cutoff", "100000", "table1"}); }

TEST(Cli, FieldFileSelector) {
    const std::string spec = std::string(ORBIVOL_TEST_DATA_DIR) + "/fields_extra.json#q3";
    Outcome o = invoke({"--digits", "30", "--output", "json", "--cutoff", "1000", "zeta", "--field", spec, "--s", "2"});
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = without_timing(o.out);
    EXPECT_EQ(j["diagnostics"]["field"], "q3");
    Outcome missing = invoke({"--digits", "30", "zeta", "--field", spec + "x"});
    EXPECT_EQ(missing.code, cli::kExitError);
}

TEST(Cli, ValuesAreDecimalStrings) {
    Outcome o = invoke({"--digits", "30", "--output", "json", "prism", "--alpha", "2pi/5"});
    ASSERT_EQ(o.code, 0);
    Json j = Json::parse(o.out);
    ASSERT_TRUE(j["results"][0]["value"].is_string());
    EXPECT_EQ(result_value(j, "vol5(P(alpha))").substr(0, 15), "0.0003756427822");
    EXPECT_TRUE(j.contains("timing"));
}

TEST(ExitCodes, Usage) {
    EXPECT_EQ(invoke({}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"prism", "--bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"--digits", "20", "prism", "--alpha", "pi/4"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"--cutoff", "10", "covolume", "--case", "gamma0"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"covolume", "--case", "gamma9"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
    Outcome o = invoke({});
    EXPECT_NE(o.out.find("Usage"), std::string::npos);
}

TEST(ExitCodes, EnvironmentDigits) {
    ::setenv("ORBIVOL_DIGITS", "ten", 1);
    EXPECT_EQ(invoke({"lob", "--omega", "pi/5"}).code, cli::kExitUsage);
    ::setenv("ORBIVOL_DIGITS", "35", 1);
    Outcome o = invoke({"--output", "json", "lob", "--omega", "pi/5"});
    ::unsetenv("ORBIVOL_DIGITS");
    ASSERT_EQ(o.code, cli::kExitOk);
    EXPECT_EQ(Json::parse(o.out)["diagnostics"]["digits"], "35");
}

TEST(ExitCodes, ComputationErrors) {
    EXPECT_EQ(invoke({"--digits", "30", "prism", "--alpha", "pi/6"}).code, cli::kExitError);
    EXPECT_EQ(invoke({"--digits", "30", "prism", "--alpha", "quarter"}).code, cli::kExitError);
    EXPECT_EQ(invoke({"--digits", "30", "coxeter", "--symbol", "[5,3,"}).code, cli::kExitError);
    EXPECT_EQ(invoke({"--digits", "30", "coxeter", "--prism", "P0", "--check", "signature"}).code, cli::kExitError);
    EXPECT_EQ(invoke({"--digits", "30", "zeta", "--field", "nosuchfield"}).code, cli::kExitError);
    Outcome o = invoke({"--digits", "30", "prism", "--alpha", "pi/6"});
    EXPECT_NE(o.err.find("outside"), std::string::npos);
}

TEST(ExitCodes, DegradedPrecision) {
    Outcome o = invoke({"--digits", "30", "--output", "json", "--cutoff", "100000", "verify", "--identity", "gamma0"});
    EXPECT_EQ(o.code, cli::kExitDegraded);
    Json j = Json::parse(o.out);
    EXPECT_EQ(j["exit_code"], cli::kExitDegraded);
    EXPECT_FALSE(j["warnings"].empty());
}

TEST(Angles, ExpressionParsing) {
    WorkingPrecision p(30);
    const Real pi = const_pi();
    EXPECT_EQ(cli::parse_angle("pi/4"), pi / 4);
    EXPECT_EQ(cli::parse_angle("2pi/5"), 2 * pi / 5);
    EXPECT_EQ(cli::parse_angle("pi"), pi);
    EXPECT_EQ(cli::parse_angle("0.75"), Real("0.75"));
    EXPECT_THROW(cli::parse_angle("pi/0"), Error);
    EXPECT_THROW(cli::parse_angle("tau"), ParseError);
}
