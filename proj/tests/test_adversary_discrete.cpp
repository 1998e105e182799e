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

#include <algorithm>

#include "robsel/adversary_discrete.hpp"
#include "robsel/oracle.hpp"
#include "robsel/prng.hpp"
#include "robsel/selection.hpp"

using namespace robsel;

namespace {

Instance make(int n, int p, int k, std::vector<long> nominal, std::vector<long> dev, long gamma) {
  Instance inst;
  inst.n = n;
  inst.p = p;
  inst.k = k;
  inst.gamma = Rational(gamma);
  inst.budget_model = BudgetModel::Discrete;
  inst.first_stage_cost.assign(n, Rational(0));
  for (long c : nominal) inst.nominal_cost.emplace_back(c);
  for (long d : dev) inst.deviation.emplace_back(d);
  return inst;
}

SelectionSolution make_x(std::vector<int> items) {
  SelectionSolution x;
  x.items = std::move(items);
  return x;
}

bool contains_pair(const CandidateSet& set, const Rational& alpha, const Rational& beta) {
  return std::any_of(set.pairs.begin(), set.pairs.end(), [&](const CandidatePair& c) {
    return c.dual.alpha == alpha && c.dual.beta == beta;
  });
}

Instance random_instance(Prng& rng, int max_n, long cost_max, long gamma_max) {
  const int n = static_cast<int>(rng.range(1, max_n));
  Instance inst;
  inst.n = n;
  inst.p = static_cast<int>(rng.range(1, n));
  inst.k = static_cast<int>(rng.range(0, inst.p));
  inst.budget_model = BudgetModel::Discrete;
  inst.gamma = Rational(rng.range(0, gamma_max));
  for (int i = 0; i < n; ++i) {
    inst.first_stage_cost.emplace_back(0);
    inst.nominal_cost.emplace_back(rng.range(0, cost_max));
    inst.deviation.emplace_back(rng.range(0, cost_max));
  }
  return inst;
}

}  // namespace

TEST_CASE("candidate pairs for the worked example") {
  Instance inst = make(3, 2, 1, {2, 3, 1}, {5, 0, 4}, 1);
  auto x = make_x({0, 1});
  auto set = candidate_pairs_arec(inst, &x);
  CHECK(contains_pair(set, Rational(5), Rational(0)));
  const long n = inst.n;
  CHECK(static_cast<long>(set.pairs.size()) <= 4 * n * n + 2 * n);
  for (const auto& c : set.pairs) CHECK(c.dual.beta.sign() >= 0);
}

TEST_CASE("zero budget collapses candidates to nominal order statistics") {
  Instance inst = make(4, 2, 1, {4, 7, 1, 3}, {5, 5, 5, 5}, 0);
  auto x = make_x({0, 1});
  auto set = candidate_pairs_arec(inst, &x);
  for (const auto& c : set.pairs) {
    bool from_nominal =
        std::any_of(inst.nominal_cost.begin(), inst.nominal_cost.end(),
                    [&](const Rational& v) { return v == c.dual.alpha; });
    CHECK(from_nominal);
  }
}

TEST_CASE("first-stage set is contained in the independent set") {
  Prng rng(88);
  for (int it = 0; it < 60; ++it) {
    Instance inst = random_instance(rng, 7, 12, 4);
    if (inst.k < 1) inst.k = 1;
    SelectionSolution x;
    x.items = rng.sample(inst.n, inst.p);
    auto with_x = candidate_pairs_arec(inst, &x);
    auto general = candidate_pairs_arec(inst, nullptr);
    for (const auto& c : with_x.pairs)
      CHECK(contains_pair(general, c.dual.alpha, c.dual.beta));
  }
}

TEST_CASE("arec_discrete worked example") {
  Instance inst = make(3, 2, 1, {2, 3, 1}, {5, 0, 4}, 1);
  auto x = make_x({0, 1});
  auto r = arec_discrete(inst, x);
  CHECK(r.value == Rational(5));
  CHECK(r.worst.deltas[2] == Rational(4));  // item 3 raised
  CHECK(r.worst.is_feasible(inst));
  CHECK(solve_irec(inst, x, r.worst).value == Rational(5));
}

TEST_CASE("arec_discrete budget extremes") {
  Instance inst = make(4, 2, 1, {4, 7, 1, 3}, {2, 5, 1, 2}, 0);
  auto x = make_x({0, 1});
  CHECK(arec_discrete(inst, x).value == solve_irec(inst, x, Scenario::nominal(inst)).value);

  inst.gamma = Rational(inst.n);
  CHECK(arec_discrete(inst, x).value == solve_irec(inst, x, Scenario::full(inst)).value);
}

TEST_CASE("arec_discrete k = 0 raises the largest first-stage deviations") {
  Instance inst = make(4, 2, 0, {1, 2, 9, 9}, {5, 7, 100, 100}, 1);
  auto r = arec_discrete(inst, make_x({0, 1}));
  CHECK(r.value == Rational(1 + 2 + 7));
  CHECK(r.worst.deltas[1] == Rational(7));
  CHECK(oracle_adversarial_discrete(inst, make_x({0, 1}), AdversarialProblem::Arec).value ==
        r.value);
}

TEST_CASE("arec_discrete equals the subset-enumeration oracle") {
  Prng rng(909);
  for (int it = 0; it < 200; ++it) {
    Instance inst = random_instance(rng, 8, 12, 4);
    SelectionSolution x;
    x.items = rng.sample(inst.n, inst.p);
    auto algo = arec_discrete(inst, x);
    auto ref = oracle_adversarial_discrete(inst, x, AdversarialProblem::Arec);
    CHECK(algo.value == ref.value);
    CHECK(algo.worst.is_feasible(inst));
    CHECK(solve_irec(inst, x, algo.worst).value == algo.value);
  }
}

TEST_CASE("prop-1 dual at the oracle worst scenario lies in the candidate set") {
  Prng rng(4242);
  for (int it = 0; it < 120; ++it) {
    Instance inst = random_instance(rng, 8, 10, 4);
    if (inst.k < 1) inst.k = 1;
    SelectionSolution x;
    x.items = rng.sample(inst.n, inst.p);
    auto ref = oracle_adversarial_discrete(inst, x, AdversarialProblem::Arec);
    auto [dual, os] = optimal_dual_pair(inst, x, *ref.witness_scenario);
    auto set = candidate_pairs_arec(inst, &x);
    CHECK(contains_pair(set, dual.alpha, dual.beta));
  }
}

TEST_CASE("candidate alphas for the two-stage problem") {
  // {0} u {nominal} u {upper}; upper costs (2,2) deduplicate.
  Instance a = make(2, 1, 0, {1, 2}, {1, 0}, 1);
  CHECK(candidate_alphas_a2st(a).alphas ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
  // With a positive second deviation the upper costs separate.
  Instance a2 = make(2, 1, 0, {1, 2}, {1, 1}, 1);
  CHECK(candidate_alphas_a2st(a2).alphas ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(2), Rational(3)});

  Instance b = make(2, 1, 0, {0, 0}, {0, 0}, 1);
  CHECK(candidate_alphas_a2st(b).alphas == std::vector<Rational>{Rational(0)});

  Instance c = make(1, 1, 0, {4}, {3}, 1);
  CHECK(candidate_alphas_a2st(c).alphas ==
        std::vector<Rational>{Rational(0), Rational(4), Rational(7)});
}

TEST_CASE("a2st_discrete worked example and extremes") {
  Instance inst = make(3, 2, 0, {1, 1, 1}, {2, 2, 2}, 2);
  auto r = a2st_discrete(inst, make_x({}));
  CHECK(r.value == Rational(4));
  CHECK(r.worst.is_feasible(inst));
  CHECK(solve_i2st(inst, make_x({}), r.worst).value == Rational(4));

  CHECK(a2st_discrete(inst, make_x({0, 1})).value == Rational(0));

  Instance zero = make(4, 2, 0, {5, 1, 3, 2}, {9, 9, 9, 9}, 0);
  CHECK(a2st_discrete(zero, make_x({1})).value == Rational(2));
}

TEST_CASE("a2st_discrete equals the subset-enumeration oracle") {
  Prng rng(31415);
  for (int it = 0; it < 200; ++it) {
    Instance inst = random_instance(rng, 8, 12, 4);
    const int take = static_cast<int>(rng.range(0, inst.p));
    SelectionSolution x;
    x.items = rng.sample(inst.n, take);
    auto algo = a2st_discrete(inst, x);
    auto ref = oracle_adversarial_discrete(inst, x, AdversarialProblem::A2st);
    CHECK(algo.value == ref.value);
    CHECK(algo.worst.is_feasible(inst));
    CHECK(solve_i2st(inst, x, algo.worst).value == algo.value);
  }
}

TEST_CASE("full discrete budget equals full continuous budget") {
  Prng rng(555);
  for (int it = 0; it < 60; ++it) {
    Instance disc = random_instance(rng, 7, 10, 2);
    disc.gamma = Rational(disc.n);
    SelectionSolution x;
    x.items = rng.sample(disc.n, disc.p);
    Instance cont = disc;
    cont.budget_model = BudgetModel::Continuous;
    cont.gamma = cont.deviation_sum();
    auto dv = arec_discrete(disc, x);
    auto cv = oracle_adversarial_continuous(cont, x, AdversarialProblem::Arec);
    CHECK(dv.value == cv.value);
  }
}
