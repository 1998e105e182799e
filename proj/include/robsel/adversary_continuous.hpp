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

#ifndef ROBSEL_ADVERSARY_CONTINUOUS_HPP
#define ROBSEL_ADVERSARY_CONTINUOUS_HPP

#include <functional>
#include <utility>

#include "robsel/instance.hpp"
#include "robsel/selection.hpp"

namespace robsel {

struct AffineFunction {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& t) const { return slope * t + intercept; }
};

/// max over t in [lo, hi] of min{f1(t), f2(t)}.
struct EnvelopeProblem {
  Rational lo;
  Rational hi;
  AffineFunction f1;
  AffineFunction f2;
};

/// Maximizes the lower envelope of two affine functions over a closed
/// interval. The optimum is at an endpoint or at the crossing point, clamped
/// into the interval; ties break toward the smaller argument.
std::pair<Rational, Rational> maximize_envelope(const EnvelopeProblem& ep);

struct AdversarialResult {
  Rational value;
  Scenario worst;
};

/// Greedy scenario for a fixed dual pair (beta >= 0): raises each item with
/// positive slack alpha + beta*x_i - nominal_i by min{slack, deviation,
/// remaining budget}, scanning items in index order.
Scenario greedy_worst_scenario(const Instance& inst, const SelectionSolution& x,
                               const DualCandidate& dual);

/// Worst-case scenario value for a complete first stage under the continuous
/// budget, via the interval scan over the breakpoint set {nominal_i} u
/// {upper_i}: the beta = 0 branch plus the two directed scans with alpha or
/// alpha+beta fixed at a breakpoint. O(n^2).
AdversarialResult arec_continuous_intervals(const Instance& inst, const SelectionSolution& x);

/// Called after every committed step of the level-raising algorithm with the
/// current levels and tracked objective; used by consistency tests.
using LevelsEventFn =
    std::function<void(const Rational& level_x, const Rational& level_xbar, const Rational& value)>;

/// Same value as arec_continuous_intervals, computed by the event-driven
/// level-raising algorithm: start every cost at its nominal value, keep one
/// cost level per side of the first stage, and repeatedly raise the level
/// (or both, when equal) with the best selected-to-active efficiency ratio
/// until the budget is spent. O(n log n) via two min-heaps of upper bounds.
AdversarialResult arec_continuous_levels(const Instance& inst, const SelectionSolution& x,
                                         const LevelsEventFn& on_event = {});

/// Worst-case completion cost for a partial first stage: removes the
/// first-stage items and runs the beta = 0 interval scan on the remainder.
AdversarialResult a2st_continuous(const Instance& inst, const SelectionSolution& x);

}  // namespace robsel

#endif  // ROBSEL_ADVERSARY_CONTINUOUS_HPP
