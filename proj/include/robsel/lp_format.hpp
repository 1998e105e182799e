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

#ifndef ROBSEL_LP_FORMAT_HPP
#define ROBSEL_LP_FORMAT_HPP

#include <string>

#include "robsel/robust_discrete.hpp"

namespace robsel {

/// Renders the MIP in LP file format with sections Minimize, Subject To,
/// Bounds, Binary, End. Coefficients whose denominator is 2^a*5^b are written
/// as exact decimals; any other row is scaled by the least common multiple of
/// its denominators to integers, so re-parsing reproduces the row exactly.
/// Output is deterministic.
std::string write_lp_text(const MipModel& m);

/// A re-parsed LP-format model; variables are adressable by name.
struct GenericMip {
  LpModel lp;
  std::vector<int> binaries;

  int var_index(const std::string& name) const;
};

/// Parses the subset of LP format produced by write_lp_text.
GenericMip parse_lp_text(const std::string& text);

/// Fixes the binary first-stage variables (named x_1..x_n) to the given set
/// and solves the remaining LP exactly; returns the optimal objective.
Rational evaluate_fixed_lp(const GenericMip& mip, const SelectionSolution& x, int n);

}  // namespace robsel

#endif  // ROBSEL_LP_FORMAT_HPP
