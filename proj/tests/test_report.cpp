#include <cstdlib>
#include <numbers>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace dgrover;

namespace {

std::vector<DihedralElement> elems(std::initializer_list<std::pair<bool, int>> list, int n) {
  std::vector<DihedralElement> out;
  for (auto [refl, k] : list) out.emplace_back(refl, k, n);
  return out;
}

ErrorCode code_of_parse(const char *text, int n, std::size_t *position = nullptr) {
  try {
    parse_set(text, n);
  } catch (const SyntaxError &e) {
    if (position) *position = e.position();
    return e.code();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ErrorCode::InvalidArgument;
}

int run_cli(const std::string &args) {
  const std::string cmd = std::string(DGROVER_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(ParseSet, Terms) {
  EXPECT_EQ(parse_set("b, b*a^1", 5).set.elements(), elems({{true, 0}, {true, 1}}, 5));
  EXPECT_EQ(parse_set("b*<a>", 4).set.elements(), elems({{true, 0}, {true, 1}, {true, 2}, {true, 3}}, 4));
  EXPECT_EQ(parse_set("b*<a^2>", 6).set.elements(), elems({{true, 0}, {true, 2}, {true, 4}}, 6));
  EXPECT_EQ(parse_set("b*a*<a^2>", 6).set.elements(), elems({{true, 1}, {true, 3}, {true, 5}}, 6));
  EXPECT_EQ(parse_set("<a>\\1", 4).set.elements(), elems({{false, 1}, {false, 2}, {false, 3}}, 4));
  EXPECT_EQ(parse_set("a, a^-1", 5).set.elements(), elems({{false, 1}, {false, 4}}, 5));
  EXPECT_EQ(parse_set("  a^7 ,a^3,b*a ", 5).set.elements(), elems({{false, 2}, {false, 3}, {true, 1}}, 5));
}

TEST(ParseSet, Errors) {
  EXPECT_EQ(code_of_parse("a^1", 5), ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of_parse("a^5", 5), ErrorCode::IdentityInSet);
  std::size_t pos = 99;
  EXPECT_EQ(code_of_parse("b, c", 5, &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(pos, 3u);
  EXPECT_EQ(code_of_parse("", 5, &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of_parse("a^", 5, &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(pos, 2u);
  EXPECT_EQ(code_of_parse("b*<a^3>", 6), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of_parse("b,", 6), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of_parse("b b", 6), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of_parse("b", 1), ErrorCode::InvalidArgument);
}

TEST(FormatSet, RoundTrip) {
  EXPECT_EQ(format_set(parse_set("b*a, b", 5).set), "b, b*a^1");
  EXPECT_EQ(format_set(parse_set("a^-1, a", 5).set), "a^1, a^4");
  for (int n = 2; n <= 7; ++n)
    for (const auto &s : oracle::all_sets(n)) ASSERT_EQ(parse_set(format_set(s), n).set, s);
}

TEST(Json, NumberFormatting) {
  EXPECT_EQ(json_number(1.0 - 1e-12).dump(), "1");
  EXPECT_EQ(json_number(-1e-13).dump(), "0");
  EXPECT_EQ(json_number(0.5).dump(), "0.5");
  EXPECT_EQ(json_number(std::cos(std::numbers::pi / 5)).dump(), "0.809016994375");
  EXPECT_EQ(text_number(-0.25), "-0.25");
}

TEST(Json, SchemaFieldsInOrder) {
  const auto j = Json(analyze(3, "b, b*a"));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "set", "degree", "normal", "connected", "bipartite", "spectrum", "period", "pst"}));
  EXPECT_EQ(j["pst"].dump(), R"({"occurs":true,"pairs":[[0,5],[1,3],[2,4]],"min_time":3,"theorem_case":"B"})");
  EXPECT_EQ(j["spectrum"][2].dump(), R"({"label":"rho1+","value":0.5,"multiplicity":2})");
  EXPECT_EQ(j["period"], 6);
}

TEST(Json, RoundTrip) {
  for (const auto &s : oracle::random_sets(60, 2, 12, 43)) {
    const auto report = analyze(s);
    const Json j = report;
    const auto back = j.get<AnalysisReport>();
    EXPECT_EQ(Json(back).dump(), j.dump());
    EXPECT_EQ(back.pst, report.pst);
    EXPECT_EQ(back.period, report.period);
  }
}

TEST(Json, NullFields) {
  const auto j = Json(analyze(8, "b*a, b*a^3, b*a^5, b*a^7"));
  EXPECT_TRUE(j["pst"]["min_time"].is_null());
  EXPECT_EQ(j["pst"]["theorem_case"], "none");
  const auto k = Json(analyze(3, "a, a^2, b"));
  EXPECT_TRUE(k["period"].is_null());
  EXPECT_EQ(Json(k.get<AnalysisReport>()).dump(), k.dump());
}

TEST(Json, StableOutput) {
  EXPECT_EQ(Json(analyze(7, "b, b*a^2, a, a^6")).dump(2), Json(analyze(7, "a^6, a, b*a^2, b")).dump(2));
}

TEST(Analyze, Examples) {
  AnalysisOptions verify;
  verify.verify = true;
  const auto a = analyze(3, "b, b*a^1", verify);
  EXPECT_TRUE(a.pst.occurs);
  EXPECT_EQ(a.pst.min_time, 3);
  EXPECT_TRUE(a.verified);
  const auto b = analyze(8, "b*a, b*a^3, b*a^5, b*a^7", verify);
  EXPECT_FALSE(b.pst.occurs);
  const auto c = analyze(5, "a^1, a^4", verify);
  EXPECT_TRUE(c.normal);
  EXPECT_FALSE(c.pst.occurs);
  EXPECT_EQ(c.pst.theorem_case, "odd-normal-impossible");
}

TEST(Analyze, DisconnectedGraph) {
  AnalysisOptions verify;
  verify.verify = true;
  const auto r = analyze(8, "a, a^3, a^5, a^7", verify);
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.pst.occurs);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Analyze, TextFormat) {
  const auto text = format_text(analyze(3, "b, b*a"));
  EXPECT_NE(text.find("minimum time 3"), std::string::npos);
  EXPECT_NE(text.find("(0,5) (1,3) (2,4)"), std::string::npos);
}

TEST(Scan, ReflectionPairFamily) {
  const auto rows = scan_family("example-5.4", 3, 8, 3);
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].param, 3 + static_cast<int>(i));
    EXPECT_TRUE(rows[i].report.pst.occurs);
    EXPECT_EQ(rows[i].report.pst.min_time, rows[i].report.n);
  }
}

TEST(Scan, ReflectionFamily) {
  for (const auto &row : scan_family("example-5.1", 3, 8, 4)) {
    const int m = row.param;
    std::optional<int> expected;
    if (m % 2 == 1) expected = 2 * m;
    else if (m % 4 == 2) expected = m;
    EXPECT_EQ(row.report.pst.min_time, expected) << m;
  }
}

TEST(Scan, AllReflectionsFamily) {
  const auto rows = scan_family("example-5.3a", 2, 6, 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].report.pst.occurs);
  EXPECT_FALSE(rows[1].report.pst.occurs);
  EXPECT_FALSE(rows[2].report.pst.occurs);
}

TEST(Scan, JobsDoNotChangeOutput) {
  const auto one = scan_json("example-5.1", scan_family("example-5.1", 2, 9, 1)).dump();
  const auto many = scan_json("example-5.1", scan_family("example-5.1", 2, 9, 5)).dump();
  EXPECT_EQ(one, many);
}

TEST(Scan, UnknownFamily) { EXPECT_THROW(scan_family("example-9", 1, 3), Error); }

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze --n 3 --set 'b, b*a' --verify"), 0);
  EXPECT_EQ(run_cli("analyze --n 3 --set 'b, b*a' --format text"), 0);
  EXPECT_EQ(run_cli("analyze --n 5 --set 'a^1'"), 1);
  EXPECT_EQ(run_cli("analyze --n 5 --set 'b, q'"), 1);
  EXPECT_EQ(run_cli("analyze --n 1 --set 'b'"), 1);
  EXPECT_EQ(run_cli("analyze --n 5"), 1);
  EXPECT_EQ(run_cli("scan --family example-5.4 --from 3 --to 5 --jobs 2"), 0);
  EXPECT_EQ(run_cli("scan --family nope --from 3 --to 5"), 1);
  EXPECT_EQ(run_cli("--help"), 0);
}

TEST(Cli, ToleranceFromEnvironment) {
  EXPECT_EQ(std::system((std::string("DGROVER_TOL=junk ") + DGROVER_CLI + " analyze --n 3 --set b > /dev/null 2>&1").c_str()) >> 8, 1);
  EXPECT_EQ(std::system((std::string("DGROVER_TOL=1e-7 ") + DGROVER_CLI + " analyze --n 3 --set b > /dev/null 2>&1").c_str()) >> 8, 0);
}

TEST(Cli, JsonOnStdout) {
  const std::string cmd = std::string(DGROVER_CLI) + " analyze --n 4 --set 'b, b*a' 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  pclose(pipe);
  const auto j = Json::parse(out);
  EXPECT_EQ(j["pst"]["min_time"], 4);
  EXPECT_EQ(j["pst"]["theorem_case"], "A");
}
