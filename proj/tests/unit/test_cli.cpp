#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cantorval/json_io.hpp"
#include "cantorval/report.hpp"

namespace fs = std::filesystem;
using cantorval::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("cantorval_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

Run run(const std::string& args, const std::string& env = "") {
  auto dir = scratch();
  auto o = dir / "stdout", e = dir / "stderr";
  std::string cmd = env + " " + quote(CANTORVAL_CLI_PATH) + " " + args + " >" + quote(o.string()) + " 2>" +
                    quote(e.string());
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(o);
  r.err = slurp(e);
  return r;
}

std::string spec(const char* name) { return quote(std::string(CANTORVAL_SAMPLES_DIR) + "/" + name); }

}  // namespace

TEST(Cli, ValidateExitCodes) {
  auto ok = run("validate --spec " + spec("gf.json"));
  EXPECT_EQ(ok.code, 0) << ok.err;
  auto doc = json::parse(ok.out);
  EXPECT_TRUE(cantorval::check_validation_report(doc).empty());
  EXPECT_TRUE(doc.at("ok").get<bool>());

  auto bad = run("validate --spec " + spec("gf_fails.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(json::parse(bad.out).at("ok").get<bool>());

  auto human = run("validate --format human --spec " + spec("kyiv48.json"));
  EXPECT_EQ(human.code, 0);
  EXPECT_NE(human.out.find("all conditions hold"), std::string::npos);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("analyze --bogus").code, 2);
  EXPECT_EQ(run("analyze --inline '{'").code, 2);
  EXPECT_EQ(run("analyze --inline '{\"type\":\"multigeometric\",\"k\":[2,3],\"q\":\"1/4\"}'").code, 2);
  EXPECT_EQ(run("analyze --spec /nonexistent/spec.json").code, 2);
  EXPECT_EQ(run("analyze --spec " + spec("gn.json") + " --inline '{}'").code, 2);
  EXPECT_EQ(run("analyze --spec " + spec("gn.json") + " --format xml").code, 2);
}

TEST(Cli, CapacityExit) {
  auto r = run("analyze --spec " + spec("dyadic.json") + " --depth 12 --cap 100");
  EXPECT_EQ(r.code, 3);
  auto err = json::parse(r.err);
  EXPECT_EQ(err.at("error"), "capacity");
  EXPECT_FALSE(err.at("stage").get<std::string>().empty());
  EXPECT_EQ(err.at("cap"), 100);
  EXPECT_EQ(run("analyze --spec " + spec("dyadic.json") + " --depth 12", "CANTORVAL_CAP=100").code, 3);
}

TEST(Cli, AnalyzeKyiv) {
  auto r = run("analyze --spec " + spec("kyiv48.json") + " --depth 6");
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_TRUE(cantorval::check_analysis_report(doc).empty());
  EXPECT_EQ(doc.at("family_values").at("groups")[0].at("r_N"), "1/25");
  EXPECT_EQ(doc.at("family_values").at("groups")[0].at("a"), "2/25");
  EXPECT_EQ(doc.at("classification").at("tier"), "Proved");
}

TEST(Cli, DeterministicOutput) {
  const std::string args = "analyze --spec " + spec("gn.json") + " --depth 6 --budget 3";
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto inl = run("analyze --inline '{\"type\": \"multigeometric\", \"k\": [3, 2], \"q\": \"1/4\"}' --depth 6 --budget 3");
  EXPECT_EQ(inl.out, a.out);
}

TEST(Cli, CsvOutputs) {
  auto dir = scratch() / "csv";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto r = run("analyze --spec " + spec("mm.json") + " --depth 5 --format csv --out " + quote(dir.string()));
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* t : {"iterations", "delta", "components", "standardness"})
    EXPECT_TRUE(fs::exists(dir / (std::string(t) + ".csv"))) << t;
  EXPECT_EQ(slurp(dir / "iterations.csv").rfind("n,measure,", 0), 0u);

  auto prefix = scratch() / "run";
  r = run("analyze --spec " + spec("gn.json") + " --depth 4 --budget 2 --format csv --out " + quote(prefix.string()));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(prefix.string() + "_delta.csv"));
  EXPECT_FALSE(fs::exists(prefix.string() + "_standardness.csv"));

  auto out = run("analyze --spec " + spec("gn.json") + " --depth 4 --budget 2 --format csv");
  EXPECT_NE(out.out.find("# iterations\n"), std::string::npos);
}

TEST(Cli, JsonToFile) {
  auto path = scratch() / "report.json";
  auto r = run("analyze --spec " + spec("middle_thirds.json") + " --depth 5 --out " + quote(path.string()));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  auto doc = json::parse(slurp(path));
  EXPECT_EQ(doc.at("classification").at("verdict"), "Cantor");
}
