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

#include "robsel/robust_discrete.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "robsel/adversary_continuous.hpp"
#include "robsel/lp_builders.hpp"
#include "robsel/selection.hpp"

namespace robsel {

namespace {

long discrete_gamma(const Instance& inst) {
  Rational g = min(inst.gamma, Rational(inst.n));
  return static_cast<long>(g.numerator().get_si());
}

std::string idx1(int i) { return std::to_string(i + 1); }

/// Sum of the largest <= limit nonnegative values; values are already >= 0.
Rational top_sum(std::vector<Rational> values, long limit) {
  std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) { return b < a; });
  Rational s;
  for (long i = 0; i < limit && i < static_cast<long>(values.size()); ++i) {
    if (values[i].sign() <= 0) break;
    s += values[i];
  }
  return s;
}

RobustResult make_result(const Instance& inst, SelectionSolution x, Rational total) {
  RobustResult res;
  res.first_stage.items = std::move(x.items);
  for (int i : res.first_stage.items) res.first_stage.value += inst.first_stage_cost[i];
  res.value = std::move(total);
  return res;
}

}  // namespace

MipModel build_rrec_discrete_mip(const Instance& inst) {
  if (!inst.is_discrete())
    throw std::invalid_argument("build_rrec_discrete_mip: discrete budget model required");
  if (inst.k < 1)
    throw std::invalid_argument("build_rrec_discrete_mip: k = 0 is the min-max case");

  MipModel m;
  m.problem = RobustProblem::Rrec;
  m.inst = inst;
  for (const auto& cand : candidate_pairs_arec(inst, nullptr).pairs)
    m.candidates.push_back(cand.dual);

  LpModel& lp = m.lp;
  lp.sense = Sense::Minimize;
  m.lambda_var = lp.add_var("lambda", std::nullopt, std::nullopt, Rational(1));
  for (int i = 0; i < inst.n; ++i) {
    m.x_vars.push_back(lp.add_var("x_" + idx1(i), Rational(0), Rational(1), Rational(0)));
    m.binaries.push_back(m.x_vars.back());
  }
  const int S = static_cast<int>(m.candidates.size());
  m.rho_vars.resize(S);
  for (int l = 0; l < S; ++l) {
    m.pi_vars.push_back(lp.add_var("pi_" + idx1(l), Rational(0), std::nullopt, Rational(0)));
    for (int i = 0; i < inst.n; ++i)
      m.rho_vars[l].push_back(
          lp.add_var("rho_" + idx1(l) + "_" + idx1(i), Rational(0), std::nullopt, Rational(0)));
  }

  // sum x = p
  {
    std::vector<std::pair<int, Rational>> terms;
    for (int v : m.x_vars) terms.push_back({v, Rational(1)});
    lp.add_row_sparse(terms, Relation::Equal, Rational(inst.p));
  }

  for (int l = 0; l < S; ++l) {
    const Rational& alpha = m.candidates[l].alpha;
    const Rational& beta = m.candidates[l].beta;
    // Linearized positive parts at x_i = 0 and their x_i increments.
    Rational cut_const = Rational(inst.p) * alpha + Rational(inst.p - inst.k) * beta;
    std::vector<std::pair<int, Rational>> cut{{m.lambda_var, Rational(1)},
                                              {m.pi_vars[l], -inst.gamma}};
    for (int i = 0; i < inst.n; ++i) {
      const Rational lo0 = pos(alpha - inst.nominal_cost[i]);
      const Rational lo1 = pos(alpha + beta - inst.nominal_cost[i]);
      const Rational hi0 = pos(alpha - inst.upper_cost(i));
      const Rational hi1 = pos(alpha + beta - inst.upper_cost(i));
      // lambda cut: lambda >= C x + Gamma pi + sum rho + const - sum [alpha + beta x_i - lo_i]_+
      cut_const -= lo0;
      Rational xcoef = inst.first_stage_cost[i] - (lo1 - lo0);
      cut.push_back({m.x_vars[i], -xcoef});
      cut.push_back({m.rho_vars[l][i], Rational(-1)});
      // coupling: pi + rho_i >= gain at x_i, gain = (lo - hi) positive parts
      Rational gain0 = lo0 - hi0;
      Rational gain1 = lo1 - hi1;
      lp.add_row_sparse({{m.pi_vars[l], Rational(1)},
                         {m.rho_vars[l][i], Rational(1)},
                         {m.x_vars[i], -(gain1 - gain0)}},
                        Relation::GreaterEqual, gain0);
    }
    lp.add_row_sparse(cut, Relation::GreaterEqual, cut_const);
  }
  return m;
}

MipModel build_r2st_discrete_mip(const Instance& inst) {
  if (!inst.is_discrete())
    throw std::invalid_argument("build_r2st_discrete_mip: discrete budget model required");

  MipModel m;
  m.problem = RobustProblem::R2st;
  m.inst = inst;
  for (const auto& alpha : candidate_alphas_a2st(inst).alphas)
    m.candidates.push_back(DualCandidate{alpha, Rational(0)});

  LpModel& lp = m.lp;
  lp.sense = Sense::Minimize;
  m.lambda_var = lp.add_var("lambda", std::nullopt, std::nullopt, Rational(1));
  for (int i = 0; i < inst.n; ++i) {
    m.x_vars.push_back(lp.add_var("x_" + idx1(i), Rational(0), Rational(1), Rational(0)));
    m.binaries.push_back(m.x_vars.back());
  }
  const int S = static_cast<int>(m.candidates.size());
  m.rho_vars.resize(S);
  for (int l = 0; l < S; ++l) {
    m.pi_vars.push_back(lp.add_var("pi_" + idx1(l), Rational(0), std::nullopt, Rational(0)));
    for (int i = 0; i < inst.n; ++i)
      m.rho_vars[l].push_back(
          lp.add_var("rho_" + idx1(l) + "_" + idx1(i), Rational(0), std::nullopt, Rational(0)));
  }

  // sum x <= p
  {
    std::vector<std::pair<int, Rational>> terms;
    for (int v : m.x_vars) terms.push_back({v, Rational(1)});
    lp.add_row_sparse(terms, Relation::LessEqual, Rational(inst.p));
  }

  for (int l = 0; l < S; ++l) {
    const Rational& alpha = m.candidates[l].alpha;
    Rational cut_const = Rational(inst.p) * alpha;
    std::vector<std::pair<int, Rational>> cut{{m.lambda_var, Rational(1)},
                                              {m.pi_vars[l], -inst.gamma}};
    for (int i = 0; i < inst.n; ++i) {
      const Rational lo = pos(alpha - inst.nominal_cost[i]);
      const Rational gain = lo - pos(alpha - inst.upper_cost(i));
      cut_const -= lo;
      // lambda >= sum (C_i - alpha + lo_i) x_i + p alpha - sum lo_i + Gamma pi + sum rho
      Rational xcoef = inst.first_stage_cost[i] - alpha + lo;
      cut.push_back({m.x_vars[i], -xcoef});
      cut.push_back({m.rho_vars[l][i], Rational(-1)});
      // pi + rho_i >= (1 - x_i) gain_i
      lp.add_row_sparse({{m.pi_vars[l], Rational(1)},
                         {m.rho_vars[l][i], Rational(1)},
                         {m.x_vars[i], gain}},
                        Relation::GreaterEqual, gain);
    }
    lp.add_row_sparse(cut, Relation::GreaterEqual, cut_const);
  }
  return m;
}

Rational evaluate_fixed_x(const MipModel& m, const SelectionSolution& x) {
  const Instance& inst = m.inst;
  if (m.problem == RobustProblem::Rrec) {
    if (x.size() != inst.p) throw std::invalid_argument("evaluate_fixed_x: |X_x| must equal p");
  } else {
    if (x.size() > inst.p)
      throw std::invalid_argument("evaluate_fixed_x: |X_x| must be at most p");
  }

  const long g = discrete_gamma(inst);
  const auto in_x = x.indicator(inst.n);
  Rational cx;
  for (int i : x.items) cx += inst.first_stage_cost[i];

  bool have = false;
  Rational best;
  for (const auto& cand : m.candidates) {
    Rational block;
    std::vector<Rational> gains(inst.n);
    if (m.problem == RobustProblem::Rrec) {
      block = Rational(inst.p) * cand.alpha + Rational(inst.p - inst.k) * cand.beta;
      for (int i = 0; i < inst.n; ++i) {
        Rational shifted = cand.alpha - inst.nominal_cost[i];
        if (in_x[i]) shifted += cand.beta;
        Rational lo = pos(shifted);
        block -= lo;
        gains[i] = lo - pos(shifted - inst.deviation[i]);
      }
    } else {
      block = Rational(inst.p - x.size()) * cand.alpha;
      for (int i = 0; i < inst.n; ++i) {
        if (in_x[i]) continue;
        Rational lo = pos(cand.alpha - inst.nominal_cost[i]);
        block -= lo;
        gains[i] = lo - pos(cand.alpha - inst.upper_cost(i));
      }
    }
    block += top_sum(std::move(gains), g);
    if (!have || block > best) {
      have = true;
      best = block;
    }
  }
  if (!have) throw std::logic_error("evaluate_fixed_x: empty candidate set");
  return cx + best;
}

RobustResult solve_exact_enumeration(const Instance& inst, RobustProblem problem, int cap) {
  if (inst.n > cap) throw std::invalid_argument("solve_exact_enumeration: item cap exceeded");

  bool have = false;
  RobustResult best;
  for (unsigned mask = 0; mask < (1u << inst.n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (problem == RobustProblem::Rrec ? size != inst.p : size > inst.p) continue;
    SelectionSolution x;
    for (int i = 0; i < inst.n; ++i)
      if ((mask >> i) & 1) x.items.push_back(i);
    Rational adv;
    if (problem == RobustProblem::Rrec)
      adv = inst.is_discrete() ? arec_discrete(inst, x).value
                               : arec_continuous_intervals(inst, x).value;
    else
      adv = inst.is_discrete() ? a2st_discrete(inst, x).value : a2st_continuous(inst, x).value;
    Rational cx;
    for (int i : x.items) cx += inst.first_stage_cost[i];
    Rational total = cx + adv;
    if (!have || total < best.value ||
        (total == best.value && x.items < best.first_stage.items)) {
      have = true;
      best = make_result(inst, std::move(x), std::move(total));
    }
  }
  if (!have) throw std::logic_error("solve_exact_enumeration: no feasible first stage");
  return best;
}

RobustResult minmax_budgeted(const Instance& inst, const std::vector<int>* restrict_items) {
  std::vector<int> items;
  if (restrict_items) {
    items = *restrict_items;
  } else {
    items.resize(inst.n);
    for (int i = 0; i < inst.n; ++i) items[i] = i;
  }
  if (static_cast<int>(items.size()) < inst.p)
    throw std::invalid_argument("minmax_budgeted: fewer selectable items than p");

  // Threshold candidates from the dual of the inner budget LP. The two
  // budget models price deviations differently: continuous scenarios split
  // the budget across items (threshold 0 or 1 on the budget row), discrete
  // ones pay per raised item (thresholds at the deviation values).
  std::vector<std::pair<Rational, std::vector<Rational>>> options;  // (theta-term, costs)
  auto base_cost = [&](int i) { return inst.first_stage_cost[i] + inst.nominal_cost[i]; };
  if (inst.is_continuous()) {
    std::vector<Rational> with_dev, nominal;
    for (int i : items) {
      with_dev.push_back(base_cost(i) + inst.deviation[i]);
      nominal.push_back(base_cost(i));
    }
    options.push_back({Rational(0), std::move(with_dev)});
    options.push_back({inst.gamma, std::move(nominal)});
  } else {
    std::vector<Rational> thetas{Rational(0)};
    for (int i : items) thetas.push_back(inst.deviation[i]);
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
    for (const auto& theta : thetas) {
      std::vector<Rational> costs;
      for (int i : items) costs.push_back(base_cost(i) + pos(inst.deviation[i] - theta));
      options.push_back({inst.gamma * theta, std::move(costs)});
    }
  }

  bool have = false;
  RobustResult best;
  for (const auto& [fixed, costs] : options) {
    auto sel = solve_selection(costs, inst.p);
    Rational total = fixed + sel.value;
    SelectionSolution x;
    for (int local : sel.items) x.items.push_back(items[local]);
    if (!have || total < best.value ||
        (total == best.value && x.items < best.first_stage.items)) {
      have = true;
      best = make_result(inst, std::move(x), std::move(total));
    }
  }
  return best;
}

std::optional<SpecialCaseResult> special_cases(const Instance& inst, RobustProblem problem) {
  if (!inst.is_discrete())
    throw std::invalid_argument("special_cases: discrete budget model required");

  if (problem == RobustProblem::Rrec) {
    if (inst.k == 0) return SpecialCaseResult{minmax_budgeted(inst), "k=0"};
    if (inst.gamma >= Rational(inst.n)) {
      // Single worst scenario: every cost at its upper bound.
      LpModel lp = build_nominal_rrec_lp(inst, inst.upper_costs());
      LpSolution sol = solve_lp(lp);
      if (!sol.optimal() || !is_zero_one(sol.primal))
        throw std::logic_error("special_cases: nominal LP failed");
      SelectionSolution x;
      for (int i = 0; i < inst.n; ++i)
        if (sol.primal[i] == Rational(1)) x.items.push_back(i);
      Rational cx;
      for (int i : x.items) cx += inst.first_stage_cost[i];
      Rational total = cx + arec_discrete(inst, x).value;
      return SpecialCaseResult{make_result(inst, std::move(x), std::move(total)), "gamma>=n"};
    }
    bool zero_first_stage = true;
    for (const auto& c : inst.first_stage_cost)
      if (!c.is_zero()) zero_first_stage = false;
    if (Rational(inst.k) >= inst.gamma && zero_first_stage) {
      auto x = solve_selection(inst.nominal_cost, inst.p);
      Rational total = arec_discrete(inst, x).value;
      return SpecialCaseResult{make_result(inst, std::move(x), std::move(total)),
                               "k>=gamma,C=0"};
    }
    return std::nullopt;
  }

  if (inst.gamma >= Rational(inst.n)) {
    // Single scenario at the upper bounds: pick p cheapest of
    // min(first-stage, upper), ties to the first stage.
    std::vector<Rational> mixed;
    for (int i = 0; i < inst.n; ++i) mixed.push_back(min(inst.first_stage_cost[i], inst.upper_cost(i)));
    auto sel = solve_selection(mixed, inst.p);
    SelectionSolution x;
    for (int i : sel.items)
      if (mixed[i] == inst.first_stage_cost[i]) x.items.push_back(i);
    Rational cx;
    for (int i : x.items) cx += inst.first_stage_cost[i];
    Rational total = cx + a2st_discrete(inst, x).value;
    return SpecialCaseResult{make_result(inst, std::move(x), std::move(total)), "gamma>=n"};
  }
  return std::nullopt;
}

namespace {

void check_approx_premise(const Instance& inst, const Rational& alpha_bound) {
  if (!inst.is_discrete())
    throw std::invalid_argument("approximation: discrete budget model required");
  if (alpha_bound.sign() <= 0 || alpha_bound > Rational(1))
    throw std::invalid_argument("approximation: alpha must lie in (0, 1]");
  for (int i = 0; i < inst.n; ++i)
    if (inst.nominal_cost[i] < alpha_bound * inst.upper_cost(i))
      throw std::invalid_argument(
          "approximation premise violated: nominal_cost[" + std::to_string(i) +
          "] < alpha * upper cost");
}

}  // namespace

ApproxResult approx_nominal_rrec(const Instance& inst, const Rational& alpha_bound) {
  check_approx_premise(inst, alpha_bound);
  LpModel lp = build_nominal_rrec_lp(inst);
  LpSolution sol = solve_lp(lp);
  if (!sol.optimal() || !is_zero_one(sol.primal))
    throw std::logic_error("approx_nominal_rrec: nominal LP failed");
  SelectionSolution x;
  for (int i = 0; i < inst.n; ++i)
    if (sol.primal[i] == Rational(1)) x.items.push_back(i);
  Rational cx;
  for (int i : x.items) cx += inst.first_stage_cost[i];
  Rational total = cx + arec_discrete(inst, x).value;
  return ApproxResult{make_result(inst, std::move(x), std::move(total)),
                      Rational(1) / alpha_bound};
}

ApproxResult approx_r2st(const Instance& inst, const Rational& alpha_bound) {
  check_approx_premise(inst, alpha_bound);
  std::vector<Rational> mixed;
  for (int i = 0; i < inst.n; ++i)
    mixed.push_back(min(inst.first_stage_cost[i], inst.nominal_cost[i]));
  auto sel = solve_selection(mixed, inst.p);
  SelectionSolution x;
  for (int i : sel.items)
    if (mixed[i] == inst.first_stage_cost[i]) x.items.push_back(i);
  Rational cx;
  for (int i : x.items) cx += inst.first_stage_cost[i];
  Rational total = cx + a2st_discrete(inst, x).value;
  return ApproxResult{make_result(inst, std::move(x), std::move(total)),
                      Rational(1) / alpha_bound};
}

}  // namespace robsel
