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

#ifndef ROBSEL_INSTANCE_HPP
#define ROBSEL_INSTANCE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "robsel/rational.hpp"

namespace robsel {

enum class BudgetModel { Continuous, Discrete };

/// Thrown by parse_instance on schema or invariant violations.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem data for the budgeted-uncertainty selection problems.
///
/// n items; p of them are selected; a first-stage solution may later be
/// repaired by exchanging up to k items. Second-stage item costs lie in
/// [nominal_cost_i, nominal_cost_i + deviation_i], with total deviation
/// controlled by the budget gamma (continuous model) or with at most gamma
/// items deviating fully (discrete model).
struct Instance {
  int n = 0;
  int p = 0;
  int k = 0;
  Rational gamma;
  BudgetModel budget_model = BudgetModel::Continuous;
  std::vector<Rational> first_stage_cost;  // C
  std::vector<Rational> nominal_cost;      // lower cost bound
  std::vector<Rational> deviation;         // d; upper bound is nominal + d

  Rational upper_cost(int i) const { return nominal_cost[i] + deviation[i]; }
  std::vector<Rational> upper_costs() const;

  Rational deviation_sum() const;
  bool is_continuous() const { return budget_model == BudgetModel::Continuous; }
  bool is_discrete() const { return budget_model == BudgetModel::Discrete; }
};

/// A realized scenario, stored as the deviation vector delta with
/// 0 <= delta_i <= deviation_i. Realized cost of item i is
/// nominal_cost_i + delta_i.
struct Scenario {
  std::vector<Rational> deltas;

  static Scenario nominal(const Instance& inst) { return Scenario{std::vector<Rational>(inst.n)}; }
  static Scenario full(const Instance& inst) { return Scenario{inst.deviation}; }

  std::vector<Rational> realized_costs(const Instance& inst) const;
  /// Checks the box constraints plus the budget constraint of the instance's
  /// uncertainty model (sum bound for continuous, all-or-nothing deviations
  /// with a cardinality bound for discrete).
  bool is_feasible(const Instance& inst) const;
};

/// An item subset together with its cost under the relevant cost vector.
/// Items are 0-based and kept sorted.
struct SelectionSolution {
  std::vector<int> items;
  Rational value;

  std::vector<char> indicator(int n) const;
  bool contains(int i) const;
  int size() const { return static_cast<int>(items.size()); }

  friend bool operator==(const SelectionSolution& a, const SelectionSolution& b) {
    return a.items == b.items && a.value == b.value;
  }
};

/// Every violated invariant of the instance, in a stable order; empty means
/// valid. Messages are short and name the offending field.
std::vector<std::string> validate_instance(const Instance& inst);

/// Parses the JSON instance document. Numeric fields must be integers or
/// decimal strings; they are converted exactly. Missing first_stage_cost
/// defaults to all zeros. Throws InstanceError with the first violation.
Instance parse_instance(const std::string& json_text);

/// Serializes with a fixed field order so equal instances produce identical
/// bytes. parse_instance(serialize_instance(i)) == i.
std::string serialize_instance(const Instance& inst);

Instance load_instance_file(const std::string& path);

bool operator==(const Instance& a, const Instance& b);

}  // namespace robsel

#endif  // ROBSEL_INSTANCE_HPP
