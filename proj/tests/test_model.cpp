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

#include <string>

#include "robsel/instance.hpp"
#include "robsel/prng.hpp"

using namespace robsel;

namespace {

const char* kBasic =
    R"({"n":2,"p":1,"k":1,"gamma":"1","budget_model":"continuous",
        "first_stage_cost":[0,0],"nominal_cost":[1,2],"deviation":[1,0]})";

bool message_contains(const std::exception& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse basic instance") {
  Instance inst = parse_instance(kBasic);
  CHECK(inst.n == 2);
  CHECK(inst.p == 1);
  CHECK(inst.k == 1);
  CHECK(inst.gamma == Rational(1));
  CHECK(inst.is_continuous());
  CHECK(inst.upper_cost(0) == Rational(2));
  CHECK(inst.upper_cost(1) == Rational(2));
}

TEST_CASE("parse rejects p > n") {
  std::string doc = kBasic;
  doc.replace(doc.find("\"p\":1"), 5, "\"p\":3");
  try {
    parse_instance(doc);
    FAIL("expected InstanceError");
  } catch (const InstanceError& e) {
    CHECK(message_contains(e, "p exceeds n"));
  }
}

TEST_CASE("parse rejects fractional discrete budget") {
  std::string doc =
      R"({"n":2,"p":1,"k":1,"gamma":"0.5","budget_model":"discrete",
          "nominal_cost":[1,2],"deviation":[1,0]})";
  try {
    parse_instance(doc);
    FAIL("expected InstanceError");
  } catch (const InstanceError& e) {
    CHECK(message_contains(e, "discrete budget must be integer"));
  }
}

TEST_CASE("parse rejects floating point numbers") {
  std::string doc =
      R"({"n":1,"p":1,"k":0,"gamma":0.5,"budget_model":"continuous",
          "nominal_cost":[1],"deviation":[0]})";
  CHECK_THROWS_AS(parse_instance(doc), InstanceError);
}

TEST_CASE("missing first_stage_cost defaults to zeros") {
  std::string doc =
      R"({"n":3,"p":2,"k":1,"gamma":2,"budget_model":"discrete",
          "nominal_cost":[1,2,3],"deviation":[1,1,1]})";
  Instance inst = parse_instance(doc);
  for (int i = 0; i < 3; ++i) CHECK(inst.first_stage_cost[i].is_zero());
}

TEST_CASE("validate_instance reports violations") {
  Instance inst = parse_instance(kBasic);
  CHECK(validate_instance(inst).empty());

  Instance bad = inst;
  bad.k = bad.p + 1;
  auto v = validate_instance(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "k exceeds p");

  bad = inst;
  bad.deviation[1] = Rational(-1);
  v = validate_instance(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "deviation must be nonnegative");
}

TEST_CASE("serialize/parse round trip") {
  Prng rng(7);
  for (int it = 0; it < 50; ++it) {
    Instance inst;
    inst.n = static_cast<int>(rng.range(1, 8));
    inst.p = static_cast<int>(rng.range(1, inst.n));
    inst.k = static_cast<int>(rng.range(0, inst.p));
    inst.budget_model = rng.coin() ? BudgetModel::Continuous : BudgetModel::Discrete;
    inst.gamma = inst.is_discrete() ? Rational(rng.range(0, 5))
                                    : Rational(rng.range(0, 20), rng.range(1, 4));
    if (inst.is_discrete()) inst.gamma = Rational(rng.range(0, 5));
    for (int i = 0; i < inst.n; ++i) {
      inst.first_stage_cost.emplace_back(rng.range(0, 9));
      inst.nominal_cost.push_back(Rational(rng.range(0, 40), 4));
      inst.deviation.push_back(Rational(rng.range(0, 40), 5));
    }
    std::string s = serialize_instance(inst);
    Instance back = parse_instance(s);
    CHECK(back == inst);
    CHECK(serialize_instance(back) == s);
  }
}

TEST_CASE("scenario feasibility") {
  Instance inst = parse_instance(kBasic);
  Scenario ok{{Rational(1, 2), Rational(0)}};
  CHECK(ok.is_feasible(inst));
  Scenario over{{Rational(2), Rational(0)}};
  CHECK_FALSE(over.is_feasible(inst));  // exceeds per-item deviation

  Instance disc = inst;
  disc.budget_model = BudgetModel::Discrete;
  Scenario half{{Rational(1, 2), Rational(0)}};
  CHECK_FALSE(half.is_feasible(disc));  // discrete deltas are all-or-nothing
  Scenario full{{Rational(1), Rational(0)}};
  CHECK(full.is_feasible(disc));
  CHECK(Scenario::nominal(disc).is_feasible(disc));
}
