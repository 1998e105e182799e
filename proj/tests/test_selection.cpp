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

#include <vector>

#include "robsel/instance.hpp"
#include "robsel/prng.hpp"
#include "robsel/selection.hpp"

using namespace robsel;

namespace {

std::vector<Rational> R(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Instance make_instance(int n, int p, int k, std::vector<Rational> nominal,
                       std::vector<Rational> dev = {}) {
  Instance inst;
  inst.n = n;
  inst.p = p;
  inst.k = k;
  inst.gamma = Rational(0);
  inst.first_stage_cost.assign(n, Rational(0));
  inst.nominal_cost = std::move(nominal);
  if (dev.empty()) dev.assign(n, Rational(0));
  inst.deviation = std::move(dev);
  return inst;
}

SelectionSolution make_x(std::vector<int> items) {
  SelectionSolution x;
  x.items = std::move(items);
  return x;
}

// Exhaustive minimum over all p-subsets with at least p-k items from X_x,
// lexicographically smallest among optima.
SelectionSolution enumerate_irec(const Instance& inst, const SelectionSolution& x,
                                 const std::vector<Rational>& costs) {
  const int n = inst.n;
  auto in_x = x.indicator(n);
  SelectionSolution best;
  bool found = false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != inst.p) continue;
    int overlap = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1 && in_x[i]) ++overlap;
    if (overlap < inst.p - inst.k) continue;
    SelectionSolution cand;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        cand.items.push_back(i);
        cand.value += costs[i];
      }
    if (!found || cand.value < best.value ||
        (cand.value == best.value && cand.items < best.items)) {
      best = cand;
      found = true;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("solve_selection picks the p cheapest items") {
  auto sol = solve_selection(R({5, 1, 3}), 2);
  CHECK(sol.items == std::vector<int>{1, 2});
  CHECK(sol.value == Rational(4));

  // Cross-check against enumeration of all 2-subsets.
  Rational best;
  bool first = true;
  std::vector<Rational> costs = R({5, 1, 3});
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Rational v = costs[a] + costs[b];
      if (first || v < best) best = v, first = false;
    }
  CHECK(sol.value == best);
}

TEST_CASE("solve_selection trivial cases") {
  auto empty = solve_selection(R({3, 1}), 0);
  CHECK(empty.items.empty());
  CHECK(empty.value == Rational(0));

  auto tie = solve_selection(R({2, 2, 2}), 2);
  CHECK(tie.items == std::vector<int>{0, 1});
  CHECK(tie.value == Rational(4));

  CHECK_THROWS_AS(solve_selection(R({1}), 2), std::invalid_argument);
}

TEST_CASE("solve_irec examples") {
  // n=5, p=3, k=1, X_x={0,1,2}, c=(4,7,2,1,9) -> y={0,2,3}, value 7.
  Instance inst = make_instance(5, 3, 1, R({4, 7, 2, 1, 9}));
  auto x = make_x({0, 1, 2});
  auto scen = Scenario::nominal(inst);
  auto y = solve_irec(inst, x, scen);
  CHECK(y.items == std::vector<int>{0, 2, 3});
  CHECK(y.value == Rational(7));
  CHECK(y == enumerate_irec(inst, x, inst.nominal_cost));

  // k=0 keeps the first stage unchanged.
  Instance inst0 = make_instance(5, 3, 0, R({4, 7, 2, 1, 9}));
  auto y0 = solve_irec(inst0, x, scen);
  CHECK(y0.items == x.items);
  CHECK(y0.value == Rational(13));

  // n=4, p=2, k=1, X_x={0,1}, c=(9,8,1,5) -> y={1,2}, value 9.
  Instance inst2 = make_instance(4, 2, 1, R({9, 8, 1, 5}));
  auto y2 = solve_irec(inst2, make_x({0, 1}), Scenario::nominal(inst2));
  CHECK(y2.items == std::vector<int>{1, 2});
  CHECK(y2.value == Rational(9));

  CHECK_THROWS_AS(solve_irec(inst, make_x({0, 1}), scen), std::invalid_argument);
}

TEST_CASE("solve_i2st examples") {
  Instance inst = make_instance(3, 2, 0, R({100, 3, 1}));
  auto y = solve_i2st(inst, make_x({0}), Scenario::nominal(inst));
  CHECK(y.items == std::vector<int>{2});
  CHECK(y.value == Rational(1));

  auto full = solve_i2st(inst, make_x({0, 1}), Scenario::nominal(inst));
  CHECK(full.items.empty());
  CHECK(full.value == Rational(0));

  Instance inst2 = make_instance(3, 2, 0, R({5, 1, 3}));
  auto y2 = solve_i2st(inst2, make_x({}), Scenario::nominal(inst2));
  CHECK(y2.items == std::vector<int>{1, 2});
  CHECK(y2.value == Rational(4));

  CHECK_THROWS_AS(solve_i2st(inst, make_x({0, 1, 2}), Scenario::nominal(inst)),
                  std::invalid_argument);
}

TEST_CASE("optimal_dual_pair examples") {
  // b1 <= b: alpha = b, beta = 0.
  Instance inst = make_instance(5, 3, 1, R({4, 7, 2, 1, 9}));
  auto [dual, os] = optimal_dual_pair(inst, make_x({0, 1, 2}), Scenario::nominal(inst));
  CHECK(os.b == Rational(4));
  CHECK(*os.b1 == Rational(4));
  CHECK(dual.alpha == Rational(4));
  CHECK(dual.beta == Rational(0));
  CHECK(incremental_dual_value(inst, make_x({0, 1, 2}), inst.nominal_cost, dual) == Rational(7));

  // b1 > b: alpha = b2, beta = b1 - b2.
  Instance inst2 = make_instance(4, 2, 1, R({9, 8, 1, 5}));
  auto [dual2, os2] = optimal_dual_pair(inst2, make_x({0, 1}), Scenario::nominal(inst2));
  CHECK(os2.b == Rational(5));
  CHECK(*os2.b1 == Rational(8));
  CHECK(*os2.b2 == Rational(1));
  CHECK(dual2.alpha == Rational(1));
  CHECK(dual2.beta == Rational(7));
  CHECK(incremental_dual_value(inst2, make_x({0, 1}), inst2.nominal_cost, dual2) == Rational(9));

  // Constant costs: beta = 0, alpha = the constant.
  Instance inst3 = make_instance(4, 2, 1, R({6, 6, 6, 6}));
  auto [dual3, os3] = optimal_dual_pair(inst3, make_x({0, 1}), Scenario::nominal(inst3));
  CHECK(dual3.alpha == Rational(6));
  CHECK(dual3.beta == Rational(0));

  Instance inst4 = make_instance(4, 2, 0, R({6, 6, 6, 6}));
  CHECK_THROWS_AS(optimal_dual_pair(inst4, make_x({0, 1}), Scenario::nominal(inst4)),
                  std::invalid_argument);
}

TEST_CASE("strong duality and split formula on random instances") {
  Prng rng(202);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(rng.range(1, 8));
    const int p = static_cast<int>(rng.range(1, n));
    const int k = static_cast<int>(rng.range(0, p));
    Instance inst;
    inst.n = n;
    inst.p = p;
    inst.k = k;
    inst.gamma = Rational(0);
    inst.first_stage_cost.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      inst.nominal_cost.push_back(Rational(rng.range(0, 20)));
      inst.deviation.push_back(Rational(rng.range(0, 10)));
    }
    SelectionSolution x;
    x.items = rng.sample(n, p);
    Scenario scen;
    for (int i = 0; i < n; ++i) {
      // random feasible per-item deltas
      scen.deltas.push_back(Rational(rng.range(0, 10), 1 + rng.range(0, 3)));
      if (scen.deltas.back() > inst.deviation[i]) scen.deltas.back() = inst.deviation[i];
    }
    auto costs = scen.realized_costs(inst);
    auto y = solve_irec(inst, x, scen);
    CHECK(y.value == incremental_value_by_split(inst, x, costs));
    CHECK(y == enumerate_irec(inst, x, costs));
    if (k >= 1) {
      auto [dual, os] = optimal_dual_pair(inst, x, scen);
      CHECK(incremental_dual_value(inst, x, costs, dual) == y.value);
      CHECK(dual.beta.sign() >= 0);
    }
  }
}

TEST_CASE("selection is invariant under constant cost shifts") {
  Prng rng(99);
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(rng.range(1, 10));
    const int p = static_cast<int>(rng.range(0, n));
    std::vector<Rational> costs;
    for (int i = 0; i < n; ++i) costs.push_back(Rational(rng.range(0, 15)));
    const Rational shift(rng.range(1, 9));
    auto base = solve_selection(costs, p);
    for (auto& c : costs) c += shift;
    auto shifted = solve_selection(costs, p);
    CHECK(shifted.items == base.items);
    CHECK(shifted.value == base.value + Rational(p) * shift);
  }
}
