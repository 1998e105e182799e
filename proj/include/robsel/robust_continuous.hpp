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

#ifndef ROBSEL_ROBUST_CONTINUOUS_HPP
#define ROBSEL_ROBUST_CONTINUOUS_HPP

#include <vector>

#include "robsel/instance.hpp"
#include "robsel/oracle.hpp"

namespace robsel {

struct RobustResult {
  SelectionSolution first_stage;  // value = first-stage cost of the set
  Rational value;                 // total objective
};

/// Candidate values of the budget multiplier pi: all fractions q/r within
/// the variant's ranges, intersected with [0,1], deduplicated and sorted;
/// 0 and 1 are always present.
std::vector<Rational> pi_candidates(int n, int p, RobustProblem variant);

/// Dominance preprocessing for the recoverable problem under the continuous
/// budget: iteratively finds items dominated by at least p others
/// (componentwise on first-stage, nominal and upper costs). Some optimal
/// first stage avoids each such item, so the reduced instance prices them
/// out of the first stage with a prohibitive first-stage cost. The items
/// themselves must stay: they remain valid repair targets and soak up
/// adversarial budget, so deleting them can change the optimum. forced_in
/// lists items safe to fix into the first stage; reported, not applied.
struct DominanceReduction {
  Instance reduced;            // same n; dominated items carry a barrier cost
  std::vector<int> removed;    // first-stage-excluded items, in removal order
  std::vector<int> forced_in;  // original indices
  std::vector<int> index_map;  // reduced index -> original index (identity)
};
DominanceReduction dominance_preprocess(const Instance& inst);

/// Exact polynomial algorithm for the recoverable robust problem under the
/// continuous budget: enumerates cardinality/pi guesses (with at most one
/// rescaled second-stage variable fractional), solves each cell as a totally
/// unimodular LP, and keeps the best reconstructed first stage. k = 0 and
/// k = p dispatch to their closed forms.
RobustResult solve_rrec_continuous(const Instance& inst);

/// Exact polynomial algorithm for the two-stage robust problem under the
/// continuous budget: enumerates pi candidates and consistent cardinality
/// triples, solving each cell as a TU LP.
RobustResult solve_r2st_continuous(const Instance& inst);

}  // namespace robsel

#endif  // ROBSEL_ROBUST_CONTINUOUS_HPP
