#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ncsieve/cli.hpp"

using namespace ncsieve;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ncsieve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::size_t count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("ncsieve_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, CspA2PassesWithOneRowPerP) {
  auto r = run_cli({"csp", "--group", "A2", "--m", "2", "--mode", "phi"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(count_lines(r.out, "  p="), 6u);  // period m*h = 6
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST(Cli, SolveH3PrintsFive) {
  auto r = run_cli({"solve", "--group", "H3", "--exps", "0,-2,1", "--relation", "eq", "--len", "1"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "5\n");
}

TEST(Cli, OutOfScopeGroupIsBudgetRefusal) {
  auto r = run_cli({"group-verify", "--group", "G37"});
  EXPECT_EQ(r.code, cli::kBudget);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(run_cli({"ncm", "--group", "H3", "--m", "3", "--budget", "10"}).code, cli::kBudget);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"csp", "--group", "A2", "--m", "2"}).code, cli::kUsage);  // mode required
  EXPECT_EQ(run_cli({"csp", "--group", "A2", "--m", "2", "--mode", "chi"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"csp", "--group", "A2", "--m", "0", "--mode", "phi"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"csp", "--group", "A2", "--m", "1", "--mode", "phi", "--full", "--divisors-only"}).code,
            cli::kUsage);
  EXPECT_EQ(run_cli({"csp", "--group", "Q9", "--m", "1", "--mode", "phi"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"fix", "--group", "H3", "--m", "2", "--mode", "phi", "--p", "x"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"decomp", "--group", "A3", "--types", "A2"}).code, cli::kUsage);  // rank mismatch
  EXPECT_EQ(run_cli({"solve", "--group", "H3", "--exps", "0", "--len", "0"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--threads", "0", "catalog"}).code, cli::kUsage);
  auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, cli::kOk);
  EXPECT_NE(help.out.find("csp"), std::string::npos);
}

TEST(Cli, CatalogListing) {
  auto r = run_cli({"catalog"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("H3  rank 3  order 120  degrees 2,6,10"), std::string::npos);
  EXPECT_NE(r.out.find("gate never"), std::string::npos);
  auto j = run_cli({"catalog", "--group", "G23", "--json"});
  ASSERT_EQ(j.code, cli::kOk);
  auto arr = nlohmann::json::parse(j.out);
  ASSERT_EQ(arr.size(), 1u);
  EXPECT_EQ(arr[0]["name"], "H3");
  EXPECT_EQ(arr[0]["order"], "120");
  EXPECT_EQ(arr[0]["coxeter_number"], 10);
}

TEST(Cli, GroupVerifyPasses) {
  auto r = run_cli({"group-verify", "--group", "G4"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CatalanAndFix) {
  auto c = run_cli({"catalan", "--group", "H3", "--m", "2"});
  EXPECT_EQ(c.code, cli::kOk);
  EXPECT_NE(c.out.find("Cat^2(H3) = 143"), std::string::npos);
  auto e = run_cli({"catalan", "--group", "H3", "--m", "3", "--denom", "30", "--p", "5"});
  EXPECT_NE(e.out.find("value 6"), std::string::npos);
  auto f = run_cli({"fix", "--group", "H3", "--m", "3", "--mode", "phi", "--p", "5,0"});
  EXPECT_EQ(f.code, cli::kOk);
  EXPECT_NE(f.out.find("p=5  fix 6  cat 6"), std::string::npos);
  auto g = run_cli({"fix", "--group", "H3", "--m", "2", "--mode", "psi", "--p", "5", "--method", "enumerate"});
  EXPECT_NE(g.out.find("p=5  fix 5  cat 5"), std::string::npos);
}

TEST(Cli, NcmCountAndDump) {
  auto r = run_cli({"ncm", "--group", "H3", "--m", "2", "--count"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "143\n");
  auto d = run_cli({"ncm", "--group", "A2", "--m", "1", "--dump"});
  EXPECT_EQ(d.code, cli::kOk);
  EXPECT_EQ(count_lines(d.out, "#"), 1u + 5u);  // header plus the 5 elements of [e, c]
}

TEST(Cli, DecompAndPlan) {
  auto d = run_cli({"decomp", "--group", "A2", "--types", "A1,A1"});
  EXPECT_EQ(d.out, "3\n");
  auto p = run_cli({"plan", "--group", "H3", "--m", "6", "--mode", "phi", "--format", "json"});
  ASSERT_EQ(p.code, cli::kOk);
  auto j = nlohmann::json::parse(p.out);
  EXPECT_EQ(j["brute_force"], nlohmann::json::array({10, 15, 20}));
  auto t = run_cli({"plan", "--group", "G25", "--m", "3", "--mode", "phi"});
  EXPECT_NE(t.out.find("brute force: {4}"), std::string::npos);
}

TEST(Cli, CasesTable) {
  auto r = run_cli({"cases", "--only", "H3,F4"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("5 passed, 0 failed, 0 skipped, 0 refused"), std::string::npos) << r.out;

  auto dir = scratch_dir("cases");
  std::ofstream(dir / "empty.txt") << "# nothing\n";
  auto empty = run_cli({"cases", "--file", (dir / "empty.txt").string()});
  EXPECT_EQ(empty.code, cli::kOk);
  EXPECT_NE(empty.out.find("0 passed, 0 failed"), std::string::npos);

  std::ofstream(dir / "bad.txt") << "name=ok group=H3 relation=eq exps=0,-2,1 len=1 expect=5\n"
                                    "name=wrong group=H3 relation=eq exps=0,-2,1 len=1 expect=6\n";
  auto bad = run_cli({"cases", "--file", (dir / "bad.txt").string()});
  EXPECT_EQ(bad.code, cli::kFail);
  EXPECT_NE(bad.err.find("wrong"), std::string::npos);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);

  std::ofstream(dir / "broken.txt") << "\nname=x group=H3 relation=eq\n";
  auto broken = run_cli({"cases", "--file", (dir / "broken.txt").string()});
  EXPECT_EQ(broken.code, cli::kUsage);
  EXPECT_NE(broken.err.find(":2:"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, CspJsonShape) {
  auto r = run_cli({"csp", "--group", "B2", "--m", "1", "--mode", "psi", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["group"], "B2");
  EXPECT_EQ(j["m"], 1);
  EXPECT_EQ(j["mode"], "psi");
  EXPECT_EQ(j["pass"], true);
  ASSERT_EQ(j["entries"].size(), 8u);
  for (const auto& e : j["entries"]) {
    EXPECT_TRUE(e["fix"].is_string());
    EXPECT_EQ(e["fix"], e["cat"]);
    EXPECT_EQ(e["ok"], true);
  }
  auto csv = run_cli({"csp", "--group", "B2", "--m", "1", "--mode", "psi", "--format", "csv"});
  EXPECT_EQ(count_lines(csv.out, "B2,1,psi,"), 8u);
}

TEST(Cli, DeterministicAcrossThreadsAndRuns) {
  const std::vector<std::vector<std::string>> cmds = {
      {"csp", "--group", "H3", "--m", "2", "--mode", "psi", "--format", "json"},
      {"ncm", "--group", "B3", "--m", "2", "--dump"},
      {"solve", "--group", "F4", "--exps", "0,1", "--len", "2", "--commute", "3", "--by-type"},
      {"cases", "--only", "H4"}};
  for (const auto& cmd : cmds) {
    auto base = run_cli(cmd);
    ASSERT_EQ(base.code, cli::kOk) << cmd[0] << base.err;
    for (const char* t : {"1", "2", "4"}) {
      auto with = cmd;
      with.insert(with.begin(), {"--threads", t});
      EXPECT_EQ(run_cli(with).out, base.out) << cmd[0] << " threads=" << t;
    }
    EXPECT_EQ(run_cli(cmd).out, base.out);
  }
}

TEST(Cli, OutputFileAndCatalogOverrides) {
  auto dir = scratch_dir("out");
  auto path = (dir / "report.json").string();
  auto r = run_cli({"csp", "--group", "A2", "--m", "1", "--mode", "phi", "--format", "json", "-o", path});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["pass"], true);

  // A catalog directory holding only A2, by flag and by environment variable.
  auto cat = dir / "cat";
  fs::create_directories(cat);
  fs::copy_file(fs::path(NCSIEVE_CATALOG_DIR) / "A2.json", cat / "A2.json");
  EXPECT_EQ(run_cli({"--catalog", cat.string(), "catalog"}).out.find("H3"), std::string::npos);
  EXPECT_EQ(run_cli({"--catalog", cat.string(), "ncm", "--group", "H3", "--m", "1"}).code, cli::kUsage);
  ::setenv("NCSIEVE_CATALOG", cat.c_str(), 1);
  auto env = run_cli({"catalog"});
  ::unsetenv("NCSIEVE_CATALOG");
  EXPECT_NE(env.out.find("A2"), std::string::npos);
  EXPECT_EQ(env.out.find("H3"), std::string::npos);

  // A single entry file passed as --group.
  auto g = run_cli({"ncm", "--group", (cat / "A2.json").string(), "--m", "1"});
  EXPECT_EQ(g.out, "5\n");
  fs::remove_all(dir);
}
