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

#include "robsel/generator.hpp"

#include <stdexcept>

#include "robsel/prng.hpp"

namespace robsel {

Instance generate_instance(const GenParams& params) {
  if (params.n < 1) throw std::invalid_argument("generate_instance: n must be positive");
  if (params.first_stage_max < 0 || params.nominal_max < 0 || params.deviation_max < 0)
    throw std::invalid_argument("generate_instance: cost ranges must be nonnegative");

  Prng rng(params.seed);
  Instance inst;
  inst.n = params.n;
  inst.p = params.p ? *params.p : static_cast<int>(rng.range(1, params.n));
  inst.k = params.k ? *params.k : static_cast<int>(rng.range(0, inst.p));
  inst.budget_model = params.budget_model;
  inst.gamma = params.gamma ? *params.gamma : Rational((params.n + 3) / 4);
  for (int i = 0; i < params.n; ++i) {
    inst.first_stage_cost.emplace_back(rng.range(0, params.first_stage_max));
    inst.nominal_cost.emplace_back(rng.range(0, params.nominal_max));
    inst.deviation.emplace_back(rng.range(0, params.deviation_max));
  }

  auto violations = validate_instance(inst);
  if (!violations.empty())
    throw std::invalid_argument("generate_instance: " + violations.front());
  return inst;
}

}  // namespace robsel
