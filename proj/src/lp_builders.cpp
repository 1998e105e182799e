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

#include "robsel/lp_builders.hpp"

#include <stdexcept>
#include <string>

namespace robsel {

LpModel build_arec_lp(const Instance& inst, const SelectionSolution& x) {
  if (!inst.is_continuous())
    throw std::invalid_argument("build_arec_lp: continuous budget model required");
  if (x.size() != inst.p) throw std::invalid_argument("build_arec_lp: |X_x| must equal p");

  const int n = inst.n;
  const auto in_x = x.indicator(n);
  LpModel m;
  m.sense = Sense::Maximize;
  const int alpha = m.add_var("alpha", std::nullopt, std::nullopt, Rational(inst.p));
  const int beta = m.add_var("beta", Rational(0), std::nullopt, Rational(inst.p - inst.k));
  std::vector<int> gamma(n), delta(n);
  for (int i = 0; i < n; ++i)
    gamma[i] = m.add_var("gamma_" + std::to_string(i + 1), Rational(0), std::nullopt, Rational(-1));
  for (int i = 0; i < n; ++i)
    delta[i] = m.add_var("delta_" + std::to_string(i + 1), Rational(0), inst.deviation[i],
                         Rational(0));

  // alpha + x_i beta - gamma_i - delta_i <= nominal_i
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, Rational>> terms{{alpha, Rational(1)},
                                                {gamma[i], Rational(-1)},
                                                {delta[i], Rational(-1)}};
    if (in_x[i]) terms.push_back({beta, Rational(1)});
    m.add_row_sparse(terms, Relation::LessEqual, inst.nominal_cost[i]);
  }
  // budget row
  std::vector<std::pair<int, Rational>> budget;
  for (int i = 0; i < n; ++i) budget.push_back({delta[i], Rational(1)});
  m.add_row_sparse(budget, Relation::LessEqual, inst.gamma);
  return m;
}

LpModel build_a2st_lp(const Instance& inst, const SelectionSolution& x) {
  if (!inst.is_continuous())
    throw std::invalid_argument("build_a2st_lp: continuous budget model required");
  if (x.size() > inst.p) throw std::invalid_argument("build_a2st_lp: |X_x| must be at most p");

  const int n = inst.n;
  const auto in_x = x.indicator(n);
  LpModel m;
  m.sense = Sense::Maximize;
  const int alpha = m.add_var("alpha", Rational(0), std::nullopt, Rational(inst.p - x.size()));
  std::vector<int> gamma(n), delta(n);
  for (int i = 0; i < n; ++i)
    gamma[i] = m.add_var("gamma_" + std::to_string(i + 1), Rational(0), std::nullopt,
                         in_x[i] ? Rational(0) : Rational(-1));
  for (int i = 0; i < n; ++i)
    delta[i] = m.add_var("delta_" + std::to_string(i + 1), Rational(0), inst.deviation[i],
                         Rational(0));

  for (int i = 0; i < n; ++i)
    m.add_row_sparse({{alpha, Rational(1)}, {gamma[i], Rational(-1)}, {delta[i], Rational(-1)}},
                     Relation::LessEqual, inst.nominal_cost[i]);
  std::vector<std::pair<int, Rational>> budget;
  for (int i = 0; i < n; ++i) budget.push_back({delta[i], Rational(1)});
  m.add_row_sparse(budget, Relation::LessEqual, inst.gamma);
  return m;
}

RrecSubproblemVars rrec_subproblem_layout(int m) {
  return RrecSubproblemVars{0, m, 2 * m, 3 * m, 4 * m, 5 * m};
}

LpModel build_rrec_tu_subproblem(const Instance& inst, const RrecSubproblemSpec& spec) {
  const int m = static_cast<int>(spec.items.size());
  const Rational one_minus_pi = Rational(1) - spec.pi;
  LpModel lp;
  lp.sense = Sense::Minimize;
  auto name = [&](const char* stem, int i) {
    return std::string(stem) + "_" + std::to_string(spec.items[i] + 1);
  };
  // Variable blocks: x, z, zbar, zp, zbarp.
  for (int i = 0; i < m; ++i)
    lp.add_var(name("x", i), Rational(0), Rational(1), inst.first_stage_cost[spec.items[i]]);
  for (int i = 0; i < m; ++i)
    lp.add_var(name("z", i), Rational(0), Rational(1),
               spec.pi * inst.nominal_cost[spec.items[i]]);
  for (int i = 0; i < m; ++i)
    lp.add_var(name("zbar", i), Rational(0), Rational(1),
               one_minus_pi * inst.upper_cost(spec.items[i]));
  for (int i = 0; i < m; ++i) lp.add_var(name("zp", i), Rational(0), Rational(1), Rational(0));
  for (int i = 0; i < m; ++i) lp.add_var(name("zbarp", i), Rational(0), Rational(1), Rational(0));

  const auto v = rrec_subproblem_layout(m);
  auto sum_row = [&](int begin, Relation rel, long rhs) {
    std::vector<std::pair<int, Rational>> terms;
    for (int i = 0; i < m; ++i) terms.push_back({begin + i, Rational(1)});
    lp.add_row_sparse(terms, rel, Rational(rhs));
  };
  sum_row(v.x_begin, Relation::Equal, spec.px);
  sum_row(v.z_begin, Relation::Equal, spec.Z);
  sum_row(v.zbar_begin, Relation::Equal, spec.Zbar);
  sum_row(v.zp_begin, Relation::GreaterEqual, spec.Zp);
  sum_row(v.zbarp_begin, Relation::GreaterEqual, spec.Zbarp);
  for (int i = 0; i < m; ++i) {
    lp.add_row_sparse({{v.zp_begin + i, Rational(1)}, {v.x_begin + i, Rational(-1)}},
                      Relation::LessEqual, Rational(0));
    lp.add_row_sparse({{v.zp_begin + i, Rational(1)}, {v.z_begin + i, Rational(-1)}},
                      Relation::LessEqual, Rational(0));
    lp.add_row_sparse({{v.zbarp_begin + i, Rational(1)}, {v.x_begin + i, Rational(-1)}},
                      Relation::LessEqual, Rational(0));
    lp.add_row_sparse({{v.zbarp_begin + i, Rational(1)}, {v.zbar_begin + i, Rational(-1)}},
                      Relation::LessEqual, Rational(0));
  }
  return lp;
}

LpModel build_r2st_tu_subproblem(const Instance& inst, const R2stSubproblemSpec& spec) {
  const int n = inst.n;
  const Rational one_minus_pi = Rational(1) - spec.pi;
  LpModel lp;
  lp.sense = Sense::Minimize;
  for (int i = 0; i < n; ++i)
    lp.add_var("x_" + std::to_string(i + 1), Rational(0), Rational(1), inst.first_stage_cost[i]);
  for (int i = 0; i < n; ++i)
    lp.add_var("z_" + std::to_string(i + 1), Rational(0), Rational(1),
               spec.pi * inst.nominal_cost[i]);
  for (int i = 0; i < n; ++i)
    lp.add_var("zbar_" + std::to_string(i + 1), Rational(0), Rational(1),
               one_minus_pi * inst.upper_cost(i));

  auto sum_row = [&](int begin, long rhs) {
    std::vector<std::pair<int, Rational>> terms;
    for (int i = 0; i < n; ++i) terms.push_back({begin + i, Rational(1)});
    lp.add_row_sparse(terms, Relation::Equal, Rational(rhs));
  };
  sum_row(0, spec.X);
  sum_row(n, spec.Z);
  sum_row(2 * n, spec.Zbar);
  for (int i = 0; i < n; ++i) {
    lp.add_row_sparse({{i, Rational(1)}, {n + i, Rational(1)}}, Relation::LessEqual, Rational(1));
    lp.add_row_sparse({{i, Rational(1)}, {2 * n + i, Rational(1)}}, Relation::LessEqual,
                      Rational(1));
  }
  return lp;
}

LpModel build_nominal_rrec_lp(const Instance& inst) {
  return build_nominal_rrec_lp(inst, inst.nominal_cost);
}

LpModel build_nominal_rrec_lp(const Instance& inst,
                              const std::vector<Rational>& second_stage_cost) {
  const int n = inst.n;
  LpModel lp;
  lp.sense = Sense::Minimize;
  for (int i = 0; i < n; ++i)
    lp.add_var("x_" + std::to_string(i + 1), Rational(0), Rational(1), inst.first_stage_cost[i]);
  for (int i = 0; i < n; ++i)
    lp.add_var("y_" + std::to_string(i + 1), Rational(0), Rational(1), second_stage_cost[i]);
  for (int i = 0; i < n; ++i)
    lp.add_var("w_" + std::to_string(i + 1), Rational(0), Rational(1), Rational(0));

  auto sum_row = [&](int begin, Relation rel, long rhs) {
    std::vector<std::pair<int, Rational>> terms;
    for (int i = 0; i < n; ++i) terms.push_back({begin + i, Rational(1)});
    lp.add_row_sparse(terms, rel, Rational(rhs));
  };
  sum_row(0, Relation::Equal, inst.p);
  sum_row(n, Relation::Equal, inst.p);
  sum_row(2 * n, Relation::GreaterEqual, inst.p - inst.k);
  for (int i = 0; i < n; ++i) {
    lp.add_row_sparse({{2 * n + i, Rational(1)}, {i, Rational(-1)}}, Relation::LessEqual,
                      Rational(0));
    lp.add_row_sparse({{2 * n + i, Rational(1)}, {n + i, Rational(-1)}}, Relation::LessEqual,
                      Rational(0));
  }
  return lp;
}

}  // namespace robsel
