#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.hpp"

using oracle::run_cli;

TEST(Cli, GoldenFilesByteIdentical) {
  for (const auto& [file, args] : oracle::golden_cases()) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.exit_code, 0) << args;
    EXPECT_EQ(r.out, oracle::read_golden(file)) << args;
  }
}

TEST(Cli, Deterministic) {
  const std::string args = "audit --gamma -1 --beta 0 -n 2 --format csv";
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, InvalidParametersExitTwo) {
  for (const auto& args : oracle::invalid_cases()) EXPECT_EQ(run_cli(args).exit_code, 2) << args;
  EXPECT_EQ(run_cli("coeffs").exit_code, 2);
  EXPECT_EQ(run_cli("rule --kind simpson -n 2").exit_code, 2);
  EXPECT_EQ(run_cli("coeffs --family Q -n 2").exit_code, 2);
  EXPECT_EQ(run_cli("coeffs --family A -n 2 --format xml").exit_code, 2);
}

TEST(Cli, CoeffsCsvRows) {
  const auto r = run_cli("coeffs --family A -n 2 -k 1 --format csv");
  EXPECT_EQ(r.out, "n,k,j,coefficient\n2,1,1,3\n2,1,2,-4\n");
  const auto g = run_cli("coeffs --gamma -2 --beta 0 -n 1 -k 0 --format csv");
  EXPECT_EQ(g.out, "n,k,j,coefficient\n1,0,0,2\n1,0,1,-3\n");
}

TEST(Cli, RadauJsonSchema) {
  const auto doc = nlohmann::json::parse(run_cli("rule --kind radau -n 1").out);
  EXPECT_EQ(doc["kind"], "radau");
  EXPECT_EQ(doc["nodes"][0], "inf");
  EXPECT_NEAR(doc["nodes"][1].get<double>(), 1.5, 1e-13);
  EXPECT_NEAR(doc["weights"][0].get<double>(), 0.25, 1e-13);
  EXPECT_NEAR(doc["weights"][1].get<double>(), 0.75, 1e-13);
  EXPECT_EQ(doc["at_infinity"], true);
  EXPECT_EQ(doc["exact_j"], nlohmann::json::array({0, 2}));
  for (const char* key : {"gamma", "beta", "n", "k"}) EXPECT_TRUE(doc.contains(key)) << key;
}

TEST(Cli, JsonRoundTripsLosslessly) {
  const auto out = run_cli("rule --kind altgauss -n 6 -k 2 --gamma -1.5 --beta -0.3").out;
  const auto doc = nlohmann::ordered_json::parse(out);
  EXPECT_EQ(doc.dump(2) + "\n", out);
  // CSV carries the same doubles at 17 significant digits
  std::istringstream csv(run_cli("rule --kind altgauss -n 6 -k 2 --gamma -1.5 --beta -0.3 --format csv").out);
  std::string line;
  std::getline(csv, line);
  for (std::size_t i = 0; std::getline(csv, line); ++i) {
    const auto comma = line.find(',');
    EXPECT_EQ(std::stod(line.substr(0, comma)), doc["nodes"][i].get<double>());
    EXPECT_EQ(std::stod(line.substr(comma + 1)), doc["weights"][i].get<double>());
  }
}

TEST(Cli, AuditSummary) {
  const auto doc = nlohmann::json::parse(run_cli("audit --gamma -1 --beta 0 -n 3").out);
  EXPECT_EQ(doc["summary"]["differentiation_formula"], "PASS");
  EXPECT_EQ(doc["summary"]["diff_difference_2"], "FAIL");
  bool flagged_11 = false;
  for (const auto& r : doc["rows"]) {
    if (r["identity"] == "diff_difference_2" && r["n"] == 1 && r["k"] == 1) flagged_11 |= r["verdict"] == "FAIL";
  }
  EXPECT_TRUE(flagged_11);
}

TEST(Cli, PlotHasOneColumnPerK) {
  std::istringstream csv(run_cli("plot --family A -n 5 --from 1 --to 10 --points 200").out);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "x,k=1,k=2,k=3,k=4,k=5");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  EXPECT_EQ(rows, 200);
}

TEST(Cli, ProjectFromSamplesFile) {
  // samples of 1/x at the A-kind rule nodes reproduce the builtin projection
  const auto rule = nlohmann::json::parse(run_cli("rule --kind altgauss -n 3 -k 1 --gamma -1 --beta 0").out);
  const std::string path = testing::TempDir() + "altrat_samples.csv";
  {
    std::ofstream out(path);
    out.precision(17);
    for (const auto& x : rule["nodes"]) out << x.get<double>() << ',' << 1 / x.get<double>() << '\n';
  }
  const auto from_file = run_cli("project --family A -n 3 --input " + path);
  EXPECT_EQ(from_file.exit_code, 0);
  EXPECT_EQ(from_file.out, run_cli("project --family A -n 3 --builtin recip").out);
  // a file that misses the rule nodes is a domain error
  EXPECT_EQ(run_cli("project --family A -n 4 --input " + path).exit_code, 2);
  std::remove(path.c_str());
}
