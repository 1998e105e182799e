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

#ifndef ROBSEL_ROBUST_DISCRETE_HPP
#define ROBSEL_ROBUST_DISCRETE_HPP

#include <optional>
#include <string>
#include <vector>

#include "robsel/adversary_discrete.hpp"
#include "robsel/lp.hpp"
#include "robsel/robust_continuous.hpp"

namespace robsel {

/// Compact MIP for a robust problem under the discrete budget: a bound
/// variable lambda cut once per candidate dual value, binary first-stage
/// variables, and one (pi, rho) block per candidate. Positive parts
/// [a + b x_i]_+ are pre-linearized as [a]_+ + ([a+b]_+ - [a]_+) x_i.
struct MipModel {
  LpModel lp;
  std::vector<int> binaries;
  RobustProblem problem = RobustProblem::Rrec;
  Instance inst;
  std::vector<DualCandidate> candidates;  // (alpha^l, beta^l); beta = 0 for the two-stage model
  int lambda_var = 0;
  std::vector<int> x_vars;
  std::vector<int> pi_vars;
  std::vector<std::vector<int>> rho_vars;
};

/// Recoverable robust MIP over the first-stage-independent candidate set;
/// 1 + n + S(1+n) variables and 1 + S(1+n) constraints with S candidates.
/// Requires k >= 1 (k = 0 is the plain min-max problem).
MipModel build_rrec_discrete_mip(const Instance& inst);

/// Two-stage robust MIP over the candidate alphas {0} u {nominal} u {upper};
/// at most 2n+1 blocks.
MipModel build_r2st_discrete_mip(const Instance& inst);

/// Exact optimal lambda of the MIP for a fixed binary first stage: each
/// block's optimal (pi, rho) is the dual of a plain selection over the
/// coupling gains, so lambda is the maximum block value. Equals first-stage
/// cost plus the adversarial value.
Rational evaluate_fixed_x(const MipModel& m, const SelectionSolution& x);

/// Reference solver by first-stage enumeration (exponential; desk scale).
/// Uses the module adversarial algorithms, continuous or discrete per the
/// instance. The default cap matches hand-checkable sizes.
RobustResult solve_exact_enumeration(const Instance& inst, RobustProblem problem, int cap = 16);

/// min-max selection with first-stage costs added: min_x max_c (C+c)x,
/// solved by enumerating the dual threshold of the inner budget LP. Handles
/// both budget models (their thresold grids differ). With restrict given,
/// only those items are selectable.
RobustResult minmax_budgeted(const Instance& inst, const std::vector<int>* restrict_items = nullptr);

struct SpecialCaseResult {
  RobustResult result;
  std::string tag;
};

/// Polynomially solvable special cases of the discrete problems: k = 0
/// (min-max), a budget of at least n (single worst scenario), and k >= gamma
/// with zero first-stage costs (nominal selection is optimal). Returns
/// nothing when no case applies.
std::optional<SpecialCaseResult> special_cases(const Instance& inst, RobustProblem problem);

struct ApproxResult {
  RobustResult result;
  Rational guarantee;  // multiplicative bound: value <= guarantee * optimum
};

/// 1/alpha-approximation for the recoverable problem when
/// nominal_i >= alpha * upper_i holds for every item: solve the
/// single-scenario nominal problem exactly, then price its first stage
/// against the true adversary.
ApproxResult approx_nominal_rrec(const Instance& inst, const Rational& alpha_bound);

/// 1/alpha-approximation for the two-stage problem: selection over
/// min(first_stage_i, nominal_i), ties assigned to the first stage.
ApproxResult approx_r2st(const Instance& inst, const Rational& alpha_bound);

}  // namespace robsel

#endif  // ROBSEL_ROBUST_DISCRETE_HPP
