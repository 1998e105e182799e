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

#ifndef ROBSEL_SELECTION_HPP
#define ROBSEL_SELECTION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "robsel/instance.hpp"
#include "robsel/rational.hpp"

namespace robsel {

/// Order statistics of a realized cost vector relative to a first-stage set:
/// b is the p-th smallest cost over all items, b1 the (p-k)-th smallest
/// inside the first-stage set (absent when k = p), b2 the k-th smallest in
/// its complement (absent when k = 0 or the complement is too small).
struct OrderStatistics {
  Rational b;
  std::optional<Rational> b1;
  std::optional<Rational> b2;
};

/// An (alpha, beta) pair feasible for the incremental problem's dual,
/// beta >= 0. The remaining dual variables are implied:
/// gamma_i = [alpha + beta*x_i - c_i]_+.
struct DualCandidate {
  Rational alpha;
  Rational beta;
};

/// The p items of smallest cost, ties broken toward smaller indices, so the
/// returned set is the lexicographically smallest optimum. Expected linear
/// time via order-statistic partitioning.
SelectionSolution solve_selection(const std::vector<Rational>& costs, int p);

/// Best repair of a complete first-stage solution x (|X_x| = p) under the
/// given scenario: p items, at least p-k of them from X_x, of minimal total
/// realized cost. Greedy: p-k cheapest inside X_x, then k cheapest among all
/// remaining items.
SelectionSolution solve_irec(const Instance& inst, const SelectionSolution& x, const Scenario& scen);

/// Cheapest completion of a partial first-stage solution (|X_x| <= p) to p
/// items, disjoint from X_x, under the given scenario.
SelectionSolution solve_i2st(const Instance& inst, const SelectionSolution& x, const Scenario& scen);

/// Optimal dual pair for the incremental problem at a fixed scenario:
/// alpha = b, beta = 0 when b1 <= b, else alpha = b2, beta = b1 - b2.
/// Requires k >= 1; k = 0 is the trivial case y = x and is reported as an
/// error.
std::pair<DualCandidate, OrderStatistics> optimal_dual_pair(const Instance& inst,
                                                            const SelectionSolution& x,
                                                            const Scenario& scen);

/// The dual objective p*alpha + (p-k)*beta - sum_i [alpha + beta*x_i - c_i]_+
/// evaluated at the candidate; equals the incremental optimum at an optimal
/// pair.
Rational incremental_dual_value(const Instance& inst, const SelectionSolution& x,
                                const std::vector<Rational>& costs, const DualCandidate& dual);

/// min over j in [max(p-k, 2p-n), p] of (sum of j smallest costs in X_x) +
/// (sum of p-j smallest outside). Equals the incremental optimum; used as an
/// algebraic cross-check.
Rational incremental_value_by_split(const Instance& inst, const SelectionSolution& x,
                                    const std::vector<Rational>& costs);

}  // namespace robsel

#endif  // ROBSEL_SELECTION_HPP
