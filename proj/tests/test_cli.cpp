// Copyright 2026 The robsel Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "robsel/cli.hpp"
#include "robsel/generator.hpp"
#include "robsel/instance.hpp"

using namespace robsel;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::vector<const char*> argv{"robsel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/robsel_test_") + name;
}

void write(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  f << content;
}

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen is deterministic and valid") {
  const std::string p1 = temp_path("gen1.json"), p2 = temp_path("gen2.json");
  auto r1 = run({"gen", "--n", "10", "--p", "5", "--k", "2", "--seed", "7", "-o", p1});
  auto r2 = run({"gen", "--n", "10", "--p", "5", "--k", "2", "--seed", "7", "-o", p2});
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(read(p1) == read(p2));
  Instance inst = load_instance_file(p1);
  CHECK(validate_instance(inst).empty());
  CHECK(inst.n == 10);
  CHECK(inst.p == 5);
  CHECK(inst.k == 2);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("gen default budget is ceil(n/4)") {
  auto r = run({"gen", "--n", "10", "--model", "discrete"});
  CHECK(r.code == 0);
  Instance inst = parse_instance(r.out);
  CHECK(inst.gamma == Rational(3));
}

TEST_CASE("solve arec on the two-item example") {
  const std::string path = temp_path("arec.json");
  write(path,
        R"({"n":2,"p":1,"k":1,"gamma":5,"budget_model":"continuous",
            "first_stage_cost":[0,0],"nominal_cost":[0,0],"deviation":[10,10],
            "first_stage":[1]})");
  for (const char* algo : {"levels", "intervals", "lp"}) {
    auto r = run({"solve", "--problem", "arec", "--algorithm", algo, "-i", path});
    REQUIRE(r.code == 0);
    auto rec = nlohmann::json::parse(r.out);
    CHECK(rec.at("value").get<std::string>() == "5/2");
    CHECK(rec.at("value_decimal").get<double>() == 2.5);
    CHECK(rec.contains("worst_scenario"));
    CHECK(rec.contains("wall_time_ms"));
  }
  std::remove(path.c_str());
}

TEST_CASE("solve dispatches rrec to the polynomial algorithm") {
  const std::string path = temp_path("rrec.json");
  write(path,
        R"({"n":3,"p":2,"k":1,"gamma":2,"budget_model":"continuous",
            "first_stage_cost":[1,1,4],"nominal_cost":[1,2,1],"deviation":[3,3,0]})");
  auto r = run({"solve", "--problem", "rrec", "-i", path});
  REQUIRE(r.code == 0);
  auto rec = nlohmann::json::parse(r.out);
  CHECK(rec.at("value").get<std::string>() == "11/2");
  CHECK(rec.at("witness_items") == nlohmann::json::array({1, 2}));
  std::remove(path.c_str());
}

TEST_CASE("invalid pairings exit with code 2") {
  const std::string path = temp_path("pairing.json");
  write(path,
        R"({"n":3,"p":2,"k":1,"gamma":2,"budget_model":"continuous",
            "nominal_cost":[1,2,1],"deviation":[3,3,0]})");
  CHECK(run({"solve", "--problem", "rrec", "--algorithm", "levels", "-i", path}).code == 2);
  CHECK(run({"solve", "--problem", "rrec", "--algorithm", "approx", "-i", path}).code == 2);
  CHECK(run({"solve", "--problem", "irec", "--algorithm", "intervals", "-i", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("invalid input exits with code 1") {
  CHECK(run({"solve", "--problem", "rrec", "-i", "/nonexistent/file.json"}).code == 1);
  const std::string path = temp_path("badp.json");
  write(path,
        R"({"n":2,"p":3,"k":1,"gamma":1,"budget_model":"continuous",
            "nominal_cost":[1,2],"deviation":[1,0]})");
  auto r = run({"solve", "--problem", "rrec", "-i", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("p exceeds n") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("incremental solve needs first stage and scenario") {
  const std::string path = temp_path("irec.json");
  write(path,
        R"({"n":4,"p":2,"k":1,"gamma":2,"budget_model":"continuous",
            "nominal_cost":[4,7,2,1],"deviation":[1,1,1,1],
            "first_stage":[1,2],"scenario":["1","0","0.5","0"]})");
  auto r = run({"solve", "--problem", "irec", "-i", path});
  REQUIRE(r.code == 0);
  auto rec = nlohmann::json::parse(r.out);
  // costs (5, 7, 5/2, 1); keep one of {1,2}, exchange one: 5 + 1 ... best is
  // items {1,4} -> 5 + 1 = 6.
  CHECK(rec.at("value").get<std::string>() == "6");
  CHECK(rec.at("witness_items") == nlohmann::json::array({1, 4}));

  write(path,
        R"({"n":4,"p":2,"k":1,"gamma":2,"budget_model":"continuous",
            "nominal_cost":[4,7,2,1],"deviation":[1,1,1,1]})");
  CHECK(run({"solve", "--problem", "irec", "-i", path}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("export writes a binary section and round-trips") {
  const std::string ip = temp_path("exp.json"), op = temp_path("exp.lp");
  write(ip,
        R"({"n":3,"p":2,"k":1,"gamma":1,"budget_model":"discrete",
            "first_stage_cost":[1,2,0],"nominal_cost":[2,3,1],"deviation":[5,0,4]})");
  auto r = run({"export", "--problem", "rrec", "-i", ip, "-o", op});
  REQUIRE(r.code == 0);
  const std::string text = read(op);
  CHECK(text.find("Binary") != std::string::npos);
  CHECK(text.find("x_1 x_2 x_3") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  auto again = run({"export", "--problem", "rrec", "-i", ip, "-o", op});
  CHECK(read(op) == text);  // deterministic bytes

  // The two-stage export has at most 2n+1 blocks.
  auto r2 = run({"export", "--problem", "r2st", "-i", ip});
  REQUIRE(r2.code == 0);
  int pi_count = 0;
  for (size_t pos = 0; (pos = r2.out.find("pi_", pos)) != std::string::npos; ++pos) ++pi_count;
  // each pi_l appears once per coupling row, once in its cut, once in Bounds
  CHECK(pi_count >= 1);

  // Continuous model cannot be exported.
  const std::string cp = temp_path("expc.json");
  write(cp,
        R"({"n":2,"p":1,"k":1,"gamma":1,"budget_model":"continuous",
            "nominal_cost":[1,2],"deviation":[1,0]})");
  CHECK(run({"export", "--problem", "rrec", "-i", cp}).code == 2);
  std::remove(ip.c_str());
  std::remove(op.c_str());
  std::remove(cp.c_str());
}

TEST_CASE("verify reports EQUAL lines ordered by seed") {
  auto r = run({"verify", "--problem", "a2st", "--algorithm", "auto", "--count", "6", "--n", "5",
                "--seed", "40", "--model", "discrete"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::uint64_t expect_seed = 40;
  int data_lines = 0;
  while (std::getline(lines, line)) {
    auto rec = nlohmann::json::parse(line);
    if (rec.contains("seed")) {
      CHECK(rec.at("seed").get<std::uint64_t>() == expect_seed++);
      CHECK(rec.at("status").get<std::string>() == "EQUAL");
      ++data_lines;
    } else {
      CHECK(rec.at("mismatches").get<int>() == 0);
    }
  }
  CHECK(data_lines == 6);
}

TEST_CASE("verify covers the remaining problems") {
  for (const char* prob : {"irec", "i2st", "arec"}) {
    for (const char* model : {"continuous", "discrete"}) {
      auto r = run({"verify", "--problem", prob, "--algorithm", "auto", "--count", "4", "--n",
                    "5", "--seed", "90", "--model", model});
      CHECK(r.code == 0);
    }
  }
  auto rrec = run({"verify", "--problem", "rrec", "--algorithm", "auto", "--count", "3", "--n",
                   "4", "--seed", "17", "--model", "continuous"});
  CHECK(rrec.code == 0);
  auto r2st = run({"verify", "--problem", "r2st", "--algorithm", "auto", "--count", "3", "--n",
                   "4", "--seed", "18", "--model", "discrete"});
  CHECK(r2st.code == 0);
}

TEST_CASE("solve output is deterministic apart from the timing field") {
  const std::string path = temp_path("det.json");
  write(path,
        R"({"n":3,"p":2,"k":1,"gamma":2,"budget_model":"continuous",
            "first_stage_cost":[1,1,4],"nominal_cost":[1,2,1],"deviation":[3,3,0]})");
  auto a = nlohmann::json::parse(run({"solve", "--problem", "rrec", "-i", path}).out);
  auto b = nlohmann::json::parse(run({"solve", "--problem", "rrec", "-i", path}).out);
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  CHECK(a == b);
  std::remove(path.c_str());
}
