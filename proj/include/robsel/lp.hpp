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

#ifndef ROBSEL_LP_HPP
#define ROBSEL_LP_HPP

#include <optional>
#include <string>
#include <vector>

#include "robsel/rational.hpp"

namespace robsel {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct LpRow {
  std::vector<Rational> coeffs;  // dense, one per variable
  Relation rel = Relation::LessEqual;
  Rational rhs;
};

/// Dense rational linear program. Variable bounds default to [0, +inf);
/// std::nullopt means unbounded on that side.
struct LpModel {
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<std::string> names;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  /// Adds a variable, returns its index.
  int add_var(std::string name, std::optional<Rational> lo, std::optional<Rational> up,
              Rational obj_coeff);
  /// Adds a dense row (pads the coefficient vector to the variable count).
  void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  /// Adds a sparse row given as (var, coeff) pairs.
  void add_row_sparse(const std::vector<std::pair<int, Rational>>& terms, Relation rel,
                      Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> primal;
  Rational objective;
  std::vector<int> basis;  // indices of model variables that ended up basic

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Exact two-phase dense simplex over the rationals with Bland's rule, so
/// termination is guaranteed on the highly degenerate totally unimodular
/// models this library produces. Deterministic: identical models yield
/// identical bases. Upper/lower variable bounds are handled natively
/// (bounded-variable simplex), not as extra rows.
LpSolution solve_lp(const LpModel& model);

/// True when every primal value is exactly 0 or 1.
bool is_zero_one(const std::vector<Rational>& values);

}  // namespace robsel

#endif  // ROBSEL_LP_HPP
