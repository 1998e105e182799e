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

#ifndef ROBSEL_ADVERSARY_DISCRETE_HPP
#define ROBSEL_ADVERSARY_DISCRETE_HPP

#include <optional>
#include <vector>

#include "robsel/adversary_continuous.hpp"
#include "robsel/instance.hpp"
#include "robsel/selection.hpp"

namespace robsel {

/// Which candidate-cost window produced a value.
enum class CandidateSource {
  SigmaP,      // p-th smallest over all items
  NuPK,        // (p-k)-th smallest inside the first stage
  VarsigmaK,   // k-th smallest outside the first stage
  SigmaPK,    // first-stage-independent window for the (p-k)-th inside value
  SigmaK,     // first-stage-independent window for the k-th outside value
};

struct CandidatePair {
  DualCandidate dual;
  CandidateSource alpha_from;
  // Case 1 pairs have beta = 0 and no partner list; case 2 pairs derive beta
  // from a partner window value.
  std::optional<CandidateSource> beta_from;
};

/// Finite candidate set guaranteed to contain an optimal dual pair (or, for
/// the two-stage variant, an optimal alpha) of the discrete adversarial
/// problem.
struct CandidateSet {
  std::vector<CandidatePair> pairs;   // recoverable variant
  std::vector<Rational> alphas;       // two-stage variant
};

/// Candidate (alpha, beta) pairs for the discrete adversarial problem with
/// recovery. With x given, builds the first-stage-dependent set; without x,
/// the first-stage-independent superset used by the compact MIP. Index
/// windows are clamped to the item range. Requires k >= 1.
CandidateSet candidate_pairs_arec(const Instance& inst, const SelectionSolution* x);

/// Worst scenario over the discrete budget set for a complete first stage:
/// maximizes, over the candidate pairs, the dual base value plus the best
/// <= gamma per-item gains. O(n^3).
AdversarialResult arec_discrete(const Instance& inst, const SelectionSolution& x);

/// {0} u {nominal_i} u {upper_i}, deduplicated and sorted.
CandidateSet candidate_alphas_a2st(const Instance& inst);

/// Worst scenario over the discrete budget set for a partial first stage.
/// O(n^2).
AdversarialResult a2st_discrete(const Instance& inst, const SelectionSolution& x);

}  // namespace robsel

#endif  // ROBSEL_ADVERSARY_DISCRETE_HPP
