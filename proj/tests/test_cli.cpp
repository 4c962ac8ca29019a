// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "tonks_cli/cli.hpp"
#include "tonks_cli/table.hpp"

namespace tonks::cli {
namespace {

struct Output {
  int code = 0;
  std::string out;
  std::string err;
};

Output invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tonks");
  std::ostringstream out, err;
  Output o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

void expect_round_trip(const std::string& text, Format format) {
  const Table parsed = format == Format::kCsv ? parse_csv(text) : parse_json(text);
  EXPECT_EQ(emit(parsed, format), text);
}

TEST(Table, CsvQuotingAndTypes) {
  Table t;
  t.columns = {"name", "x", "n", "missing"};
  t.add_row({std::string("a,b \"c\""), 0.1, std::int64_t{-3}, std::monostate{}});
  t.add_row({std::string("1e5"), 2.0, std::int64_t{0}, std::string("")});
  const std::string csv = to_csv(t);
  EXPECT_EQ(csv, "name,x,n,missing\n\"a,b \"\"c\"\"\",0.10000000000000001,-3,\n\"1e5\",2,0,\"\"\n");
  expect_round_trip(csv, Format::kCsv);
  expect_round_trip(to_json(t), Format::kJson);
  EXPECT_THROW(t.add_row({1.0}), std::logic_error);
}

TEST(Table, NonFiniteValues) {
  Table t;
  t.columns = {"v"};
  t.add_row({std::numeric_limits<double>::infinity()});
  t.add_row({-0.0});
  expect_round_trip(to_csv(t), Format::kCsv);
  EXPECT_EQ(to_csv(t), "v\ninf\n-0\n");
  EXPECT_EQ(to_json(t), "[\n  {\n    \"v\": null\n  },\n  {\n    \"v\": -0.0\n  }\n]\n");
  expect_round_trip(to_json(t), Format::kJson);
}

TEST(Table, ParseErrors) {
  EXPECT_THROW(parse_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_csv("a,b\n1\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("a\n\"open\n"), std::invalid_argument);
  EXPECT_THROW(parse_json("{}"), std::invalid_argument);
  EXPECT_THROW(parse_json("[{\"a\": [1]}]"), std::invalid_argument);
}

TEST(Cli, ContinuousRootsGrid) {
  const auto o = invoke({"roots", "--continuous", "--t-grid", "0.5:30:0.5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const Table t = parse_csv(o.out);
  ASSERT_EQ(t.rows.size(), 60u);
  EXPECT_EQ(t.columns[0], "t");
  EXPECT_EQ(std::get<double>(t.rows[0][0]), 0.5);
  EXPECT_NEAR(std::get<double>(t.rows[0][1]), 2.0, 1e-11);
  expect_round_trip(o.out, Format::kCsv);
}

TEST(Cli, BoundsRow) {
  const auto o = invoke({"bounds"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("continuous,fps,0.29289"), std::string::npos) << o.out;
  expect_round_trip(o.out, Format::kCsv);
}

TEST(Cli, EverySubcommandRoundTripsInBothFormats) {
  const std::vector<std::vector<std::string>> commands = {
      {"roots", "--k", "2", "--n", "6"},
      {"partition", "--k", "1", "--n", "3", "--rho", "1/4"},
      {"partition", "--continuous", "--t", "3/2", "--rho", "0.25", "--s", "1/2"},
      {"partition", "--k", "1", "--n", "5", "--coefficients"},
      {"inverse", "--rho", "0.2"},
      {"inverse", "--rho", "1/4", "--k", "1"},
      {"free-energy", "--rho", "1/5", "--t", "20"},
      {"free-energy", "--rho", "1/5", "--k", "1", "--n", "100"},
      {"scaling"},
      {"bounds", "--k", "3"},
      {"penrose-check", "--n", "4", "--replicates", "20"},
      {"penrose-check", "--config", "[\"0\",\"-2/5\",\"2/5\"]"},
      {"series", "--rho", "0.2", "--N", "5", "--t", "30"},
      {"series", "--rho", "0.1", "--k", "1", "--N", "4", "--n", "50"},
      {"simulate", "--rho", "1/4", "--t", "5", "--replicates", "500"},
      {"simulate", "--rho", "1/5", "--k", "1", "--n", "12", "--replicates", "500", "--what", "avoidance"},
  };
  for (auto args : commands) {
    const auto csv = invoke(args);
    ASSERT_EQ(csv.code, kExitOk) << args[0] << ": " << csv.err;
    expect_round_trip(csv.out, Format::kCsv);
    args.push_back("--format");
    args.push_back("json");
    const auto json = invoke(args);
    ASSERT_EQ(json.code, kExitOk) << args[0] << ": " << json.err;
    expect_round_trip(json.out, Format::kJson);
    EXPECT_EQ(to_csv(parse_json(json.out)), csv.out) << args[0];
  }
}

TEST(Cli, PartitionValues) {
  const auto o = invoke({"partition", "--k", "1", "--n", "3", "--rho", "1/4"});
  const Table t = parse_csv(o.out);
  EXPECT_EQ(std::get<std::string>(t.rows[0][3]), "5/16");
  EXPECT_EQ(std::get<std::string>(t.rows[0][5]), "5/8");
  // Decimal input converts exactly.
  const auto d = invoke({"partition", "--k", "1", "--n", "3", "--rho", "0.25"});
  EXPECT_EQ(d.out, o.out);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"inverse"}).code, kExitUsage);
  EXPECT_EQ(invoke({"inverse", "--rho", "0.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"inverse", "--rho", "1/x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bounds", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"roots", "--k", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--rho", "0.2", "--k", "1", "--n", "12", "--what", "dependence", "--region",
                    "1:5", "--region2", "6:12"})
                .code,
            kExitUsage);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("penrose-check"), std::string::npos);
}

TEST(Cli, SeedFromEnvironmentAndFlagWins) {
  const std::vector<std::string> base = {"simulate", "--rho", "0.3", "--t", "4", "--replicates", "300"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args).out;
  };
  const std::string seed7 = with({"--seed", "7"});
  const std::string seed8 = with({"--seed", "8"});
  EXPECT_NE(seed7, seed8);
  ::setenv("TONKS_SEED", "7", 1);
  EXPECT_EQ(with({}), seed7);
  EXPECT_EQ(with({"--seed", "8"}), seed8);
  ::setenv("TONKS_SEED", "junk", 1);
  EXPECT_EQ(invoke(base).code, kExitUsage);
  ::unsetenv("TONKS_SEED");
  EXPECT_EQ(with({}), with({"--seed", "42"}));
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "tonks_bounds.csv";
  const auto o = invoke({"bounds", "--out", path});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), invoke({"bounds"}).out);
  std::remove(path.c_str());
}

TEST(Cli, VerifyExitCodeReflectsCriteria) {
  const auto o = invoke({"verify", "--replicates", "2000"});
  ASSERT_NE(o.code, kExitUsage) << o.err;
  const Table t = parse_csv(o.out);
  ASSERT_EQ(t.rows.size(), 12u);
  bool all_pass = true;
  for (const auto& row : t.rows) all_pass = all_pass && std::get<std::string>(row[2]) == "PASS";
  EXPECT_EQ(o.code, all_pass ? kExitOk : kExitVerificationFailed);
  expect_round_trip(o.out, Format::kCsv);
}

}  // namespace
}  // namespace tonks::cli
