#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "renyi_cli/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = renyi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("renyi_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, EntropyOfBscInBits) {
  const Result r = run({"entropy", "--kind", "shannon", "--alpha", "1", "--channel", "bsc:0.11", "--bits"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["unit"], "bits");
  EXPECT_EQ(doc["outputs"], 2);
  const double p = 0.11;
  const double h = -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
  EXPECT_NEAR(doc["entropy"].get<double>(), h, 1e-12);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const Result missing = run({"entropy", "--kind", "A", "--alpha", "2"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("entropy"), std::string::npos);
  EXPECT_EQ(run({"entropy", "--kind", "Q", "--alpha", "2", "--channel", "bsc:0.1"}).code, 2);
  EXPECT_EQ(run({"entropy", "--kind", "A", "--alpha", "-1", "--channel", "bsc:0.1"}).code, 2);
  EXPECT_EQ(run({"entropy", "--kind", "A", "--alpha", "2", "--channel", "bsc:1.5"}).code, 2);
  EXPECT_EQ(run({"gap", "--kind", "H", "--p", "0.2", "--alpha-range", "2:1:0.1"}).code, 2);
  EXPECT_EQ(run({"polarize", "--alpha", "2", "--channel", "bsc:0.1", "--merge"}).code, 2);
  EXPECT_EQ(run({"entropy", "--kind", "A", "--alpha", "2", "--channel", "/no/such/file.json"}).code, 2);
}

TEST(Cli, OutputFailureExitsWithOne) {
  const Result r = run({"entropy", "--kind", "H", "--alpha", "2", "--channel", "bec:0.3", "--out",
                        "/proc/renyi-no-such-dir/out.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BoundsReportIsSandwiched) {
  const Result r = run({"bounds", "--kind", "J", "--alpha", "1.5", "--ch1", "bsc:0.11", "--ch2", "bec:0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "sandwiched");
  EXPECT_TRUE(doc["asserted"].get<bool>());
  EXPECT_GE(doc["bsc_slack"].get<double>(), -1e-10);
  EXPECT_GE(doc["bec_slack"].get<double>(), -1e-10);
}

TEST(Cli, GapCsvVanishesAtOrderTwoForHayashi) {
  const Result r = run({"gap", "--kind", "H", "--p", "0.2", "--alpha-range", "1.5:2.6:0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "alpha,delta");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_DOUBLE_EQ(rows[1].first, 2.0);
  EXPECT_NEAR(rows[1].second, 0.0, 1e-12);
  EXPECT_GT(std::abs(rows[0].second), 1e-6);
  EXPECT_GT(std::abs(rows[2].second), 1e-6);
  EXPECT_LT(rows[0].second * rows[2].second, 0.0);
}

TEST(Cli, ExtendedGapViaEnvironmentOrFlag) {
  const Result r = run({"gap", "--kind", "A", "--p", "1e-6", "--alpha-range", "1.5:1.51:0.005",
                        "--precision", "extended"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1.5,"), std::string::npos);
}

TEST(Cli, ScanMarksNumericalEvidence) {
  const Result r = run({"scan", "--func", "kkH", "--alpha-range", "2.5:3.1:0.5", "--grid", "32"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "numerical evidence");
  ASSERT_EQ(doc["verdicts"].size(), 2u);
  EXPECT_EQ(doc["verdicts"][0]["classification"], "convex");
  EXPECT_EQ(doc["verdicts"][1]["classification"], "linear");
}

TEST(Cli, VerifyIsDeterministicForASeed) {
  const std::vector<std::string> args{"verify", "linear", "--samples", "50", "--seed", "7"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json::parse(a.out)["passed"].get<bool>());
  const Result c = run({"verify", "linear", "--samples", "50", "--seed", "8"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, PolarizeWritesFilesAtomically) {
  const fs::path dir = scratch_dir("polarize");
  const fs::path csv = dir / "nodes.csv";
  const fs::path stats = dir / "stats.json";
  const Result r = run({"polarize", "--alpha", "2", "--channel", "bsc:0.11", "--depth", "3", "--out",
                        csv.string(), "--stats", stats.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string nodes = slurp(csv);
  EXPECT_EQ(nodes.rfind("path,level,i_value\n", 0), 0u);
  EXPECT_EQ(std::count(nodes.begin(), nodes.end(), '\n'), 1 + 1 + 2 + 4 + 8);
  const json levels = json::parse(slurp(stats));
  ASSERT_EQ(levels.size(), 4u);
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    EXPECT_TRUE(name == "nodes.csv" || name == "stats.json") << "stray file " << name;
  }
  fs::remove_all(dir);
}

TEST(Cli, HelpExitsCleanly) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("polarize"), std::string::npos);
}
