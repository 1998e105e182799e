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

#ifndef ROBSEL_ORACLE_HPP
#define ROBSEL_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "robsel/instance.hpp"

namespace robsel {

enum class IncrementalProblem { Irec, I2st };
enum class AdversarialProblem { Arec, A2st };
enum class RobustProblem { Rrec, R2st };

/// Result of a brute-force reference computation. Witnesses, when present,
/// are feasible and attain the reported value.
struct OracleReport {
  Rational value;
  std::optional<SelectionSolution> witness_x;
  std::optional<Scenario> witness_scenario;
  std::optional<SelectionSolution> witness_y;
  std::uint64_t enumeration_size = 0;
};

/// Enumeration caps; exceeding one is an error, never silent truncation.
/// The environment variable ROBSEL_ORACLE_CAP, when set, overrides the three
/// item-count caps.
struct OracleCaps {
  int incremental_n = 20;
  int adversarial_n = 16;
  long adversarial_gamma = 8;
  int robust_n = 12;
};
OracleCaps oracle_caps();

/// Exact incremental optimum by full subset enumeration; the witness is the
/// lexicographically smallest optimal item set. Deliberately avoids the
/// greedy used by solve_irec.
OracleReport oracle_incremental(const Instance& inst, const SelectionSolution& x,
                                const Scenario& scen, IncrementalProblem problem);

/// Exact discrete adversarial optimum by enumerating every deviation subset
/// of size at most gamma.
OracleReport oracle_adversarial_discrete(const Instance& inst, const SelectionSolution& x,
                                         AdversarialProblem problem);

/// Exact continuous adversarial optimum via the exact LP formulation; the
/// witness scenario is read off the deviation variables.
OracleReport oracle_adversarial_continuous(const Instance& inst, const SelectionSolution& x,
                                           AdversarialProblem problem);

/// Exact robust optimum: minimum over enumerated first stages of first-stage
/// cost plus the adversarial oracle value.
OracleReport oracle_robust(const Instance& inst, RobustProblem problem);

}  // namespace robsel

#endif  // ROBSEL_ORACLE_HPP
