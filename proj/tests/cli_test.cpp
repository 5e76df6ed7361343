// Copyright 2026 The Archipelago Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "archipelago_cli.hpp"

namespace archipelago::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, bool timestamp = false) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, timestamp);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

TEST(Cli, ListModels) {
  const auto r = run({"list-models"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["command"], "list-models");
  EXPECT_EQ(j["result"].size(), 5U);
}

TEST(Cli, ClassifyBellState) {
  const auto r = run({"classify", "M3", "--t1", "1", "--t2", "1", "--t3", "-1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r)["result"];
  EXPECT_EQ(j["label"], "free_entangled");
  EXPECT_EQ(j["physical"], true);
  EXPECT_EQ(j["ppt"], false);
}

TEST(Cli, ProbPayloadIsReproducible) {
  const std::vector<std::string> args = {"prob", "M1", "--samples", "200000", "--seed", "7",
                                         "--compare-closed-form"};
  const auto a = run(args);
  auto with_workers = args;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  const auto b = run(with_workers);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = parse(a)["result"];
  EXPECT_EQ(j["n_samples"], 200000);
  EXPECT_TRUE(j.contains("std_error"));
  EXPECT_EQ(j["closed_form_kind"], "exact");
}

TEST(Cli, TimestampIsPresentByDefault) {
  const auto r = run({"list-models"}, true);
  EXPECT_TRUE(parse(r).contains("timestamp"));
  EXPECT_FALSE(parse(run({"list-models"})).contains("timestamp"));
}

TEST(Cli, Verify) {
  const auto r = run({"verify"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse(r)["result"]["all_pass"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"prob", "M9"}).code, kExitUsage);
  EXPECT_NE(run({"prob", "M9"}).err.find("known models"), std::string::npos);
  EXPECT_EQ(run({"prob", "M1", "--constraint", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"prob", "M5", "--physical-mode", "analytic"}).code, kExitUsage);
  EXPECT_EQ(run({"islands", "M1", "--resolution", "80"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "M1", "--t1", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"emptiness", "M5"}).code, kExitUsage);
  EXPECT_EQ(run({"prob", "M1", "--samples", "0"}).code, kExitUsage);
}

TEST(Cli, Islands) {
  const auto r = run({"islands", "M2", "--resolution", "41"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r)["result"];
  EXPECT_EQ(j["island_count"], 8);
  EXPECT_EQ(j["islands"].size(), 8U);
}

TEST(Cli, ExportGrid) {
  const auto path = temp("archipelago_cli_export.ply");
  const auto r = run({"export", "M1", "--resolution", "33", "--format", "ply", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse(r)["result"]["island_count"], 8);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "ply");
  std::filesystem::remove(path);
}

TEST(Cli, ExportToBadPathIsIoError) {
  EXPECT_EQ(run({"export", "M1", "--resolution", "33", "--out", "/nonexistent-dir/a.csv"}).code,
            kExitIo);
}

TEST(Cli, ConfigFile) {
  const auto path = temp("archipelago_cli_config.json");
  {
    std::ofstream f(path);
    f << R"({"samples": 50000, "seed": 3, "physical_mode": "analytic", "compare_closed_form": true})";
  }
  const auto a = run({"prob", "M2", "--config", path.string()});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const auto cfg = parse(a)["config"];
  EXPECT_EQ(cfg["samples"], 50000);
  EXPECT_EQ(cfg["physical_mode"], "analytic");
  // flags win over the file
  const auto b = run({"prob", "M2", "--config", path.string(), "--seed", "4"});
  EXPECT_EQ(parse(b)["config"]["seed"], 4);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"prob", "M2", "--config", path.string()}).code, kExitIo);
}

TEST(Cli, Bounds) {
  const auto r = run({"bounds", "M3", "--objective", "product", "--set", "ppt", "--restarts", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(parse(r)["result"]["best_value"].get<double>(), 1.0 / 27.0, 1e-9);
}

TEST(Cli, Emptiness) {
  const auto r = run({"emptiness", "M1", "--samples", "10000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse(r)["result"]["hits"], 0);
}

TEST(Cli, Thresholds) {
  const auto r = run({"thresholds", "M1", "--restarts", "8", "--samples", "20000"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse(r)["result"]["consistent"], true);
}

}  // namespace
}  // namespace archipelago::cli
