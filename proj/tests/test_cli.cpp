#include <infl/checks.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace infl;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(INFLECT_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Inflect, DisplayedWeierstrassThree) {
  auto r = run("--no-header inflect --family weierstrass --m 3 --u 1/2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_poly(first_line(r.out)), parse_poly(displayed_weierstrass().at(3)));
}

TEST(Inflect, HeaderCarriesTimestampUnlessSuppressed) {
  auto r = run("inflect --family weierstrass --m 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# inflect", 0), 0u);
  EXPECT_NE(run("--no-header inflect --family weierstrass --m 2").out.rfind("# inflect", 0), 0u);
}

TEST(Inflect, LegendreFirstSymbolic) {
  auto r = run("--no-header inflect --family legendre --abc 1,1,1 --m 1 --u symbolic");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_poly(first_line(r.out)), parse_poly("u*(3*x^2 - 2*(1+lam)*x + lam)"));
}

TEST(Inflect, D6FactorIsPeeled) {
  auto r = run("--no-header inflect --family d6 --m 4 --u 1/2 --factor");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "peeled x^2*(4*z - 1)");
  auto j = json::parse(run("--json inflect --family d6 --m 4 --u 1/2 --factor").out);
  EXPECT_EQ(j["factor"]["x_power"], 2);
  EXPECT_TRUE(j["factor"]["has_factor_4z_minus_1"].get<bool>());
}

TEST(Inflect, JsonMetadataAndFiles) {
  auto j = json::parse(run("--json inflect --family weierstrass --m 4 --u 1/2").out);
  EXPECT_EQ(j["m"], 4);
  EXPECT_EQ(j["spec"], "weierstrass");
  EXPECT_EQ(j["denominator_primes"], json::array({"2"}));
  auto dir = std::filesystem::temp_directory_path() / "inflect_cli_out";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(run("--out " + dir.string() + " inflect --family weierstrass --m 3").code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "weierstrass_m3.txt"));
  EXPECT_TRUE(std::filesystem::exists(dir / "weierstrass_m3.json"));
  std::filesystem::remove_all(dir);
}

TEST(Inflect, UsageErrors) {
  EXPECT_EQ(run("inflect --family nonsense --m 3").code, 2);
  EXPECT_EQ(run("inflect --family weierstrass --m x").code, 2);
  EXPECT_EQ(run("inflect --family weierstrass --m 3 --factor").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Newton, CenteredWeierstrass) {
  auto j = json::parse(run("--json newton --family weierstrass --m 5 --at centered").out);
  EXPECT_EQ(j["polygon"], "Conv((0,3),(1,2),(3,1),(9,0),(10,0),(0,5))");
  EXPECT_EQ(j["lower_hull_delta"], 4);
}

TEST(Verify, GvIdentity378) {
  auto r = run("--json --no-header verify ramification.gv-identity --n 3 --alpha 3 --beta 1");
  ASSERT_EQ(r.code, 0);
  auto rep = json::parse(r.out)["reports"][0];
  EXPECT_EQ(rep["verdict"], "pass");
  EXPECT_NE(rep["computed"].get<std::string>().find("378"), std::string::npos);
  for (auto key : {"id", "params", "verdict", "computed", "expected", "millis"}) EXPECT_TRUE(rep.contains(key)) << key;
}

TEST(Verify, RangesAndTable) {
  EXPECT_EQ(run("verify legendre.u-half.newton-polygon --m 2..10").code, 0);
  EXPECT_EQ(run("verify weierstrass.resultant-table --m 6..9").code, 0);
}

TEST(Verify, FailureCarriesCounterexample) {
  auto r = run("verify legendre.symmetries --a 1 --m 1 --json");
  EXPECT_EQ(r.code, 1);
  auto rep = json::parse(r.out)["reports"][0];
  EXPECT_EQ(rep["verdict"], "fail");
  EXPECT_NE(rep["counterexample"].get<std::string>().find("m=1"), std::string::npos);
}

TEST(Verify, RefusedExitsZero) {
  auto r = run("--json verify d4.centered.newton-polygon --m 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["reports"][0]["verdict"], "refused");
}

TEST(Verify, UnknownIdPrintsCatalog) {
  auto r = run("verify no.such.check", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("weierstrass.resultant-table"), std::string::npos);
  EXPECT_EQ(run("verify weierstrass.genus --q 3").code, 2);
  EXPECT_EQ(run("verify weierstrass.genus --m 9..2").code, 2);
}

TEST(Verify, ListNamesEveryCheckWithItsStatement) {
  auto cat = json::parse(run("--json verify --list").out);
  ASSERT_EQ(cat.size(), check_registry().size());
  std::set<std::string> ids;
  for (auto& c : cat) {
    ids.insert(c["id"].get<std::string>());
    EXPECT_FALSE(c["anchor"].get<std::string>().empty()) << c["id"];
  }
  EXPECT_EQ(ids.size(), cat.size());
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  std::string ids = "weierstrass.genus weierstrass.mu3-grading legendre.u-half.coefficients d4.origin.newton-polygon";
  auto a = run("--no-header --threads 1 verify " + ids);
  auto b = run("--no-header --threads 4 verify " + ids);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto pos = a.out.find("d4.origin"), pos2 = a.out.find("weierstrass.genus");
  EXPECT_LT(pos, pos2);
}

TEST(Verify, ConfigPresetsAndFlagsOverride) {
  auto cfg = std::filesystem::temp_directory_path() / "inflect_cli.conf";
  std::ofstream(cfg) << "# presets\nm = 6..7\nbound = 500\n";
  auto j = json::parse(run("--json --config " + cfg.string() + " verify weierstrass.resultant-table").out);
  EXPECT_EQ(j["reports"][0]["params"]["m"], "6..7");
  j = json::parse(run("--json --config " + cfg.string() + " verify weierstrass.resultant-table --m 8").out);
  EXPECT_EQ(j["reports"][0]["params"]["m"], "8");
  std::filesystem::remove(cfg);
}

TEST(Count, D4CurveAtSeven) {
  auto r = run("count --curve d4-c2 --p 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::to_string(count_points(d4_c2(), var::x, var::s, 7, Closure::projective_p2())) + "\n");
}

TEST(Count, BadPrimeIsACleanRefusal) {
  auto r = run("count --curve d4-c2 --p 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("refused", 0), 0u);
}

TEST(Count, CsvSchemaAndCustomCurves) {
  auto r = run("--no-header count --curve d4-c2 --p 5..20");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "p,count,e,e_tilde");
  EXPECT_EQ(run("count --poly 'x^2 + s^2 - 1' --vars x,s --p 13 --closure projective").out, "14\n");
}

TEST(SatoTate, CsvAndKsLineAreDeterministic) {
  auto a = run("--no-header satotate --bound 2000 --bins 20");
  auto b = run("--no-header --threads 3 satotate --bound 2000 --bins 20");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(first_line(a.out), "bin_left,bin_right,frequency");
  EXPECT_NE(a.out.find("# KS "), std::string::npos);
}

TEST(Discriminant, LedgerForThree) {
  auto j = json::parse(run("--json discriminant --m 3").out);
  ASSERT_EQ(j["ledger"].size(), 3u);
  for (auto& e : j["ledger"]) EXPECT_TRUE(e["divides"].get<bool>());
  EXPECT_EQ(j["ledger"][0]["multiplicity"], 5);
}

TEST(Wronskian, ThreeFourNine) {
  auto j = json::parse(run("--json wronskian --n 3 --d 4 --ell 9").out);
  EXPECT_EQ(j["genus"], 3);
  EXPECT_EQ(j["matrix"].size(), 3u);
}
