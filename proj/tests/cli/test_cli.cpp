#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "finvar/groupfile.hpp"

using namespace finvar::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FINVAR_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, MolienExamples) {
  EXPECT_EQ(invoke({"molien", data("trivial_1dim.group"), "--degree", "3"}).out, "[1, 1, 1, 1]\n");
  EXPECT_EQ(invoke({"molien", data("q8.group"), "--degree", "6"}).out, "[1, 0, 0, 0, 2, 0, 1]\n");
  // 1 / ((1 - t^2)(1 - t^6))
  EXPECT_EQ(invoke({"molien", data("dihedral12.group"), "--degree", "8"}).out, "[1, 0, 1, 0, 1, 0, 2, 0, 2]\n");
}

TEST(Cli, MolienOfExportedN) {
  const std::string path = testing::TempDir() + "finvar_group_n.group";
  ASSERT_EQ(invoke({"catalog", "export", "group_n", path}).code, kExitPass);
  Result r = invoke({"molien", path, "--degree", "4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "[1, 0, 0, 0, 5]\n");
  std::remove(path.c_str());
}

TEST(Cli, ParseErrorsExitTwoWithLine) {
  Result r = invoke({"molien", data("bad_entry.group"), "--degree", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 6"), std::string::npos);
  EXPECT_EQ(invoke({"molien", data("does_not_exist.group"), "--degree", "2"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"catalog", "build", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"molien", data("q8.group")}).code, kExitUsage);
  EXPECT_THROW(run_suite("nope", {}), UsageError);
  EXPECT_EQ(invoke({"--help"}).code, kExitPass);
}

TEST(Cli, CatalogVerbs) {
  Result b = invoke({"catalog", "build", "binary_icosahedral"});
  EXPECT_EQ(b.code, kExitPass);
  EXPECT_EQ(b.out.rfind("order 120: pass\n", 0), 0u);
  Result l = invoke({"catalog", "list"});
  EXPECT_EQ(l.code, kExitPass);
  EXPECT_GE(std::count(l.out.begin(), l.out.end(), '\n'), 15);
}

TEST(Cli, CatalogExportRoundTrip) {
  const std::string path = testing::TempDir() + "finvar_q8.group";
  ASSERT_EQ(invoke({"catalog", "export", "quaternion_q8", path}).code, kExitPass);
  finvar::GroupFile f = finvar::read_group_file(path);
  const std::string first = finvar::format_group_file(f);
  finvar::write_group_file(path, f);
  std::ifstream in(path);
  std::stringstream again;
  again << in.rdbuf();
  EXPECT_EQ(again.str(), first);
  std::remove(path.c_str());
}

TEST(Cli, VerifySegrePasses) {
  Result r = invoke({"verify", "segre"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.rfind("finvar-report 1\nsuite segre\n", 0), 0u);
  EXPECT_NE(r.out.find("check segre.lambda_outer\n"), std::string::npos);
  EXPECT_NE(r.out.find("overall pass"), std::string::npos);
}

TEST(Cli, VerifyExitCodeFollowsFailures) {
  // The igusa suite carries a known failing check.
  Result r = invoke({"verify", "igusa"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("overall fail"), std::string::npos);
}

TEST(Cli, StripTiming) {
  Report a{"x", {finvar::make_check("x.a", "d", "1", "1")}, {"n"}};
  Report b = a;
  a.checks[0].seconds = 1.5;
  b.checks[0].seconds = 0.25;
  EXPECT_NE(format_reports({a}), format_reports({b}));
  EXPECT_EQ(strip_timing(format_reports({a})), strip_timing(format_reports({b})));
}

TEST(Cli, DeterministicReports) {
  Result a = invoke({"verify", "monomial"});
  Result b = invoke({"verify", "monomial", "--jobs", "2"});
  EXPECT_EQ(strip_timing(a.out), strip_timing(b.out));
}

TEST(Cli, MonomialReduce) {
  Result r = invoke({"monomial", "reduce", data("a4_monomial.group")});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("lattice_basis [[1,1,1],[0,2,0],[0,0,2]]\n"), std::string::npos);
  EXPECT_NE(r.out.find("pi0_delta [[0,1,-1],[1,0,-1],[0,0,-1]]\n"), std::string::npos);
  EXPECT_NE(r.out.find("classification_pi0 Gamma10\n"), std::string::npos);
  Result q8 = invoke({"monomial", "reduce", data("q8.group")});
  EXPECT_EQ(q8.code, kExitPass);
  EXPECT_NE(q8.out.find("lattice_basis [[2]]\n"), std::string::npos);
  EXPECT_EQ(invoke({"monomial", "reduce", data("dihedral12.group")}).code, kExitUsage);
}

TEST(Cli, SegreReport) {
  Result r = invoke({"segre", "report"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("<123|345>"), std::string::npos);
  EXPECT_NE(r.out.find("node <123|456> (1,1,1,-1,-1,-1)"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n') > 130, true);
}

TEST(Cli, JobsFromEnvironment) {
  setenv(kJobsEnv, "3", 1);
  EXPECT_EQ(default_jobs(), 3);
  setenv(kJobsEnv, "garbage", 1);
  EXPECT_EQ(default_jobs(), 1);
  unsetenv(kJobsEnv);
  EXPECT_EQ(default_jobs(), 1);
}
