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

#ifndef ROBSEL_LP_BUILDERS_HPP
#define ROBSEL_LP_BUILDERS_HPP

#include <vector>

#include "robsel/instance.hpp"
#include "robsel/lp.hpp"

namespace robsel {

/// Exact LP for the adversarial problem with recovery under the continuous
/// budget: variables (alpha, beta, gamma_i, delta_i), maximizing the
/// incremental dual with the scenario as part of the decision.
/// Variable order: alpha, beta, gamma_0..gamma_{n-1}, delta_0..delta_{n-1}.
LpModel build_arec_lp(const Instance& inst, const SelectionSolution& x);

/// Exact LP for the adversarial completion problem (two-stage) under the
/// continuous budget. Variable order: alpha, gamma_0.., delta_0...
LpModel build_a2st_lp(const Instance& inst, const SelectionSolution& x);

/// Cardinality-guessed relaxation of the recoverable subproblem over item
/// subset J: variables (x_i, z_i, zbar_i, zp_i, zbarp_i) for i in J, all in
/// [0,1]; rows sum x = px, sum z = Z, sum zbar = Zbar, sum zp >= Zp,
/// sum zbarp >= Zbarp, and couplings zp <= x, zp <= z, zbarp <= x,
/// zbarp <= zbar. The coefficient matrix is totally unimodular, so optimal
/// basic solutions are 0/1.
struct RrecSubproblemSpec {
  std::vector<int> items;  // J, 0-based instance indices
  int px = 0;              // required first-stage cardinality within J
  int Z = 0;
  int Zbar = 0;
  int Zp = 0;
  int Zbarp = 0;
  Rational pi;
};
LpModel build_rrec_tu_subproblem(const Instance& inst, const RrecSubproblemSpec& spec);

/// Cardinality-guessed relaxation of the two-stage subproblem: variables
/// (x_i, z_i, zbar_i) in [0,1] over all items; rows sum x = X, sum z = Z,
/// sum zbar = Zbar and couplings x_i + z_i <= 1, x_i + zbar_i <= 1.
struct R2stSubproblemSpec {
  int X = 0;
  int Z = 0;
  int Zbar = 0;
  Rational pi;
};
LpModel build_r2st_tu_subproblem(const Instance& inst, const R2stSubproblemSpec& spec);

/// Single-scenario recoverable problem as a TU LP: min C x + c y with
/// sum x = p, sum y = p, sum w >= p-k, w <= x, w <= y, vars in [0,1].
/// second_stage_cost defaults to the nominal costs.
LpModel build_nominal_rrec_lp(const Instance& inst);
LpModel build_nominal_rrec_lp(const Instance& inst, const std::vector<Rational>& second_stage_cost);

/// Variable slices for the builders above, used to read vertices back.
struct RrecSubproblemVars {
  int x_begin, z_begin, zbar_begin, zp_begin, zbarp_begin, count;
};
RrecSubproblemVars rrec_subproblem_layout(int m);

}  // namespace robsel

#endif  // ROBSEL_LP_BUILDERS_HPP
