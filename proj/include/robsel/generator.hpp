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

#ifndef ROBSEL_GENERATOR_HPP
#define ROBSEL_GENERATOR_HPP

#include <cstdint>
#include <optional>

#include "robsel/instance.hpp"

namespace robsel {

/// Parameters for seeded instance generation. Costs are uniform integers in
/// [0, max]. A missing gamma defaults to ceil(n/4) in both budget models; a
/// missing p (or k) is drawn uniformly from its valid range.
struct GenParams {
  std::uint64_t seed = 0;
  int n = 8;
  std::optional<int> p;
  std::optional<int> k;
  std::optional<Rational> gamma;
  BudgetModel budget_model = BudgetModel::Continuous;
  long first_stage_max = 10;
  long nominal_max = 10;
  long deviation_max = 10;
};

/// Deterministic: equal parameters produce byte-identical instances.
Instance generate_instance(const GenParams& params);

}  // namespace robsel

#endif  // ROBSEL_GENERATOR_HPP
