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

#include "robsel/oracle.hpp"

#include <cstdlib>
#include <stdexcept>

#include "robsel/lp.hpp"
#include "robsel/lp_builders.hpp"

namespace robsel {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int popcount(unsigned mask) { return __builtin_popcount(mask); }

SelectionSolution solution_from_mask(const Instance& inst, unsigned mask,
                                     const std::vector<Rational>& costs) {
  SelectionSolution s;
  for (int i = 0; i < inst.n; ++i)
    if ((mask >> i) & 1) {
      s.items.push_back(i);
      s.value += costs[i];
    }
  return s;
}

long discrete_gamma(const Instance& inst) {
  Rational g = min(inst.gamma, Rational(inst.n));
  return static_cast<long>(g.numerator().get_si());
}

}  // namespace

OracleCaps oracle_caps() {
  OracleCaps caps;
  if (const char* env = std::getenv("ROBSEL_ORACLE_CAP")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) {
      caps.incremental_n = static_cast<int>(v);
      caps.adversarial_n = static_cast<int>(v);
      caps.robust_n = static_cast<int>(v);
    }
  }
  return caps;
}

OracleReport oracle_incremental(const Instance& inst, const SelectionSolution& x,
                                const Scenario& scen, IncrementalProblem problem) {
  require(inst.n <= oracle_caps().incremental_n, "oracle_incremental: item cap exceeded");
  if (problem == IncrementalProblem::Irec)
    require(x.size() == inst.p, "oracle_incremental: |X_x| must equal p");
  else
    require(x.size() <= inst.p, "oracle_incremental: |X_x| must be at most p");

  const auto costs = scen.realized_costs(inst);
  const auto in_x = x.indicator(inst.n);

  OracleReport report;
  bool found = false;
  SelectionSolution best;
  for (unsigned mask = 0; mask < (1u << inst.n); ++mask) {
    if (problem == IncrementalProblem::Irec) {
      if (popcount(mask) != inst.p) continue;
      int overlap = 0;
      for (int i = 0; i < inst.n; ++i)
        if (((mask >> i) & 1) && in_x[i]) ++overlap;
      if (overlap < inst.p - inst.k) continue;
    } else {
      if (popcount(mask) != inst.p - x.size()) continue;
      bool touches_x = false;
      for (int i = 0; i < inst.n; ++i)
        if (((mask >> i) & 1) && in_x[i]) touches_x = true;
      if (touches_x) continue;
    }
    ++report.enumeration_size;
    SelectionSolution cand = solution_from_mask(inst, mask, costs);
    if (!found || cand.value < best.value ||
        (cand.value == best.value && cand.items < best.items)) {
      best = std::move(cand);
      found = true;
    }
  }
  require(found, "oracle_incremental: no feasible repair exists");
  report.value = best.value;
  report.witness_y = std::move(best);
  return report;
}

OracleReport oracle_adversarial_discrete(const Instance& inst, const SelectionSolution& x,
                                         AdversarialProblem problem) {
  const auto caps = oracle_caps();
  require(inst.is_discrete(), "oracle_adversarial_discrete: discrete budget model required");
  require(inst.n <= caps.adversarial_n, "oracle_adversarial_discrete: item cap exceeded");
  const long g = discrete_gamma(inst);
  require(g <= caps.adversarial_gamma || g >= inst.n,
          "oracle_adversarial_discrete: budget cap exceeded");

  OracleReport report;
  bool found = false;
  for (unsigned mask = 0; mask < (1u << inst.n); ++mask) {
    if (popcount(mask) > g) continue;
    Scenario scen;
    scen.deltas.assign(inst.n, Rational(0));
    for (int i = 0; i < inst.n; ++i)
      if ((mask >> i) & 1) scen.deltas[i] = inst.deviation[i];
    auto inner = oracle_incremental(inst, x, scen,
                                    problem == AdversarialProblem::Arec
                                        ? IncrementalProblem::Irec
                                        : IncrementalProblem::I2st);
    report.enumeration_size += inner.enumeration_size;
    if (!found || inner.value > report.value) {
      found = true;
      report.value = inner.value;
      report.witness_scenario = std::move(scen);
      report.witness_y = std::move(inner.witness_y);
    }
  }
  require(report.witness_scenario->is_feasible(inst),
          "oracle_adversarial_discrete: infeasible witness");
  return report;
}

OracleReport oracle_adversarial_continuous(const Instance& inst, const SelectionSolution& x,
                                           AdversarialProblem problem) {
  require(inst.is_continuous(), "oracle_adversarial_continuous: continuous budget model required");
  LpModel model = problem == AdversarialProblem::Arec ? build_arec_lp(inst, x)
                                                      : build_a2st_lp(inst, x);
  LpSolution sol = solve_lp(model);
  require(sol.optimal(), "oracle_adversarial_continuous: adversarial LP not optimal");

  OracleReport report;
  report.value = sol.objective;
  Scenario scen;
  scen.deltas.assign(inst.n, Rational(0));
  // delta variables are the trailing block in both builders.
  const int delta_begin = model.num_vars() - inst.n;
  for (int i = 0; i < inst.n; ++i) scen.deltas[i] = sol.primal[delta_begin + i];
  require(scen.is_feasible(inst), "oracle_adversarial_continuous: infeasible witness");
  report.witness_scenario = std::move(scen);
  return report;
}

OracleReport oracle_robust(const Instance& inst, RobustProblem problem) {
  require(inst.n <= oracle_caps().robust_n, "oracle_robust: item cap exceeded");

  OracleReport report;
  bool found = false;
  for (unsigned mask = 0; mask < (1u << inst.n); ++mask) {
    const int size = popcount(mask);
    if (problem == RobustProblem::Rrec ? size != inst.p : size > inst.p) continue;
    SelectionSolution x = solution_from_mask(inst, mask, inst.first_stage_cost);
    OracleReport adv =
        inst.is_discrete()
            ? oracle_adversarial_discrete(inst, x,
                                          problem == RobustProblem::Rrec
                                              ? AdversarialProblem::Arec
                                              : AdversarialProblem::A2st)
            : oracle_adversarial_continuous(inst, x,
                                            problem == RobustProblem::Rrec
                                                ? AdversarialProblem::Arec
                                                : AdversarialProblem::A2st);
    report.enumeration_size += adv.enumeration_size + 1;
    Rational total = x.value + adv.value;
    if (!found || total < report.value ||
        (total == report.value && x.items < report.witness_x->items)) {
      found = true;
      report.value = total;
      report.witness_x = std::move(x);
      report.witness_scenario = std::move(adv.witness_scenario);
      report.witness_y = std::move(adv.witness_y);
    }
  }
  require(found, "oracle_robust: no feasible first stage");
  return report;
}

}  // namespace robsel
