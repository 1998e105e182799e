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

#include "robsel/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace robsel {

int LpModel::add_var(std::string name, std::optional<Rational> lo, std::optional<Rational> up,
                     Rational obj_coeff) {
  names.push_back(std::move(name));
  lower.push_back(std::move(lo));
  upper.push_back(std::move(up));
  objective.push_back(std::move(obj_coeff));
  for (auto& row : rows) row.coeffs.emplace_back(0);
  return num_vars() - 1;
}

void LpModel::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  coeffs.resize(num_vars());
  rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs)});
}

void LpModel::add_row_sparse(const std::vector<std::pair<int, Rational>>& terms, Relation rel,
                             Rational rhs) {
  std::vector<Rational> coeffs(num_vars());
  for (const auto& [var, coeff] : terms) coeffs[var] += coeff;
  rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs)});
}

bool is_zero_one(const std::vector<Rational>& values) {
  for (const auto& v : values)
    if (!v.is_zero() && v != Rational(1)) return false;
  return true;
}

namespace {

constexpr int kNoVar = -1;

enum class ColKind { Shifted, Negated, FreePos, FreeNeg, Slack, Artificial };
enum class VarState : unsigned char { AtLower, AtUpper, Basic };

struct Column {
  ColKind kind;
  int model_var;       // kNoVar for slack/artificial
  Rational shift;      // x = shift + t (Shifted) or x = shift - t (Negated)
  Rational upper;      // internal upper bound; ignored when unbounded
  bool has_upper;
};

// Bounded-variable two-phase tableau simplex, exact rational arithmetic,
// Bland's rule for both entering and leaving choices.
class Simplex {
 public:
  explicit Simplex(const LpModel& model) : model_(model) {}

  LpSolution run();

 private:
  struct Infeasible {};

  void build();
  bool phase(const std::vector<Rational>& cost, bool phase_one);
  void drive_out_artificials();
  void strip_artificial_columns();
  LpSolution extract();

  void compute_cost_row(const std::vector<Rational>& cost);
  void pivot(int row, int col);

  const LpModel& model_;
  int m_ = 0;              // tableau rows
  int ncols_ = 0;          // tableau columns (structural + slack + artificial)
  int first_artificial_ = 0;
  std::vector<Column> cols_;
  std::vector<std::vector<Rational>> tab_;  // m x ncols, kept row-reduced
  std::vector<Rational> bval_;              // current basic values
  std::vector<int> basis_;                  // column index per row
  std::vector<VarState> state_;             // per column
  std::vector<Rational> cost_row_;          // reduced costs per column
  std::vector<Rational> fixed_value_;       // per model var, for lo == up vars
  std::vector<char> is_fixed_;
};

void Simplex::build() {
  const int nv = model_.num_vars();
  fixed_value_.assign(nv, Rational(0));
  is_fixed_.assign(nv, 0);

  // Column layout for every model variable.
  std::vector<std::vector<int>> var_cols(nv);
  for (int i = 0; i < nv; ++i) {
    const auto& lo = model_.lower[i];
    const auto& up = model_.upper[i];
    if (lo && up) {
      if (*up < *lo) throw Infeasible{};
      if (*lo == *up) {
        is_fixed_[i] = 1;
        fixed_value_[i] = *lo;
        continue;
      }
    }
    if (lo) {
      Column c{ColKind::Shifted, i, *lo, Rational(0), false};
      if (up) {
        c.upper = *up - *lo;
        c.has_upper = true;
      }
      cols_.push_back(std::move(c));
      var_cols[i] = {static_cast<int>(cols_.size()) - 1};
    } else if (up) {
      cols_.push_back(Column{ColKind::Negated, i, *up, Rational(0), false});
      var_cols[i] = {static_cast<int>(cols_.size()) - 1};
    } else {
      cols_.push_back(Column{ColKind::FreePos, i, Rational(0), Rational(0), false});
      cols_.push_back(Column{ColKind::FreeNeg, i, Rational(0), Rational(0), false});
      var_cols[i] = {static_cast<int>(cols_.size()) - 2, static_cast<int>(cols_.size()) - 1};
    }
  }
  const int n_struct = static_cast<int>(cols_.size());

  m_ = model_.num_rows();
  tab_.assign(m_, {});
  bval_.assign(m_, Rational(0));
  std::vector<int> slack_col(m_, kNoVar);

  // Count slacks first so the column count is known before filling rows.
  int n_slack = 0;
  for (const auto& row : model_.rows)
    if (row.rel != Relation::Equal) ++n_slack;
  int next_slack = n_struct;
  for (int r = 0; r < m_; ++r)
    if (model_.rows[r].rel != Relation::Equal) {
      slack_col[r] = next_slack++;
      cols_.push_back(Column{ColKind::Slack, kNoVar, Rational(0), Rational(0), false});
    }
  ncols_ = n_struct + n_slack;

  for (int r = 0; r < m_; ++r) {
    const LpRow& row = model_.rows[r];
    // >= rows are negated into <= form.
    const bool negate_rel = row.rel == Relation::GreaterEqual;
    Rational rhs = negate_rel ? -row.rhs : row.rhs;
    std::vector<Rational> coeffs(ncols_, Rational(0));
    for (int i = 0; i < nv; ++i) {
      const Rational& a = row.coeffs[i];
      if (a.is_zero()) continue;
      Rational v = negate_rel ? -a : a;
      if (is_fixed_[i]) {
        rhs -= v * fixed_value_[i];
        continue;
      }
      for (int c : var_cols[i]) {
        const Column& col = cols_[c];
        switch (col.kind) {
          case ColKind::Shifted:
            rhs -= v * col.shift;
            coeffs[c] = v;
            break;
          case ColKind::Negated:
            rhs -= v * col.shift;
            coeffs[c] = -v;
            break;
          case ColKind::FreePos:
            coeffs[c] = v;
            break;
          case ColKind::FreeNeg:
            coeffs[c] = -v;
            break;
          default:
            break;
        }
      }
    }
    if (slack_col[r] != kNoVar) coeffs[slack_col[r]] = Rational(1);
    // Normalize to rhs >= 0 so phase 1 can start from a feasible basis.
    if (rhs.sign() < 0) {
      for (auto& c : coeffs) c = -c;
      rhs = -rhs;
    }
    tab_[r] = std::move(coeffs);
    bval_[r] = std::move(rhs);
  }

  // Initial basis: a slack with +1 coefficient where possible, otherwise an
  // artificial variable.
  basis_.assign(m_, kNoVar);
  first_artificial_ = ncols_;
  for (int r = 0; r < m_; ++r) {
    if (slack_col[r] != kNoVar && tab_[r][slack_col[r]] == Rational(1)) {
      basis_[r] = slack_col[r];
    } else {
      cols_.push_back(Column{ColKind::Artificial, kNoVar, Rational(0), Rational(0), false});
      const int ac = ncols_++;
      for (int i = 0; i < m_; ++i) tab_[i].emplace_back(i == r ? 1 : 0);
      basis_[r] = ac;
    }
  }

  state_.assign(ncols_, VarState::AtLower);
  for (int r = 0; r < m_; ++r) state_[basis_[r]] = VarState::Basic;
}

void Simplex::compute_cost_row(const std::vector<Rational>& cost) {
  cost_row_ = cost;
  cost_row_.resize(ncols_, Rational(0));
  for (int r = 0; r < m_; ++r) {
    const Rational& cb = cost_row_[basis_[r]];
    if (cb.is_zero()) continue;
    Rational f = cb;  // copy; cost_row_[basis_[r]] mutates below
    const auto& row = tab_[r];
    for (int c = 0; c < ncols_; ++c) {
      if (row[c].is_zero()) continue;
      cost_row_[c] -= f * row[c];
    }
  }
}

void Simplex::pivot(int prow, int pcol) {
  auto& prow_vec = tab_[prow];
  const Rational piv = prow_vec[pcol];
  assert(!piv.is_zero());
  if (piv != Rational(1)) {
    mpq_t inv;
    mpq_init(inv);
    mpq_inv(inv, piv.raw().get_mpq_t());
    for (auto& v : prow_vec) {
      if (v.is_zero()) continue;
      mpq_mul(v.raw().get_mpq_t(), v.raw().get_mpq_t(), inv);
    }
    mpq_clear(inv);
  }
  // Indices of nonzero pivot-row entries; the tableaus here are sparse and
  // this cuts the row-update cost substantially.
  static thread_local std::vector<int> nz;
  nz.clear();
  for (int c = 0; c < ncols_; ++c)
    if (!prow_vec[c].is_zero()) nz.push_back(c);

  mpq_t t;
  mpq_init(t);
  for (int r = 0; r < m_; ++r) {
    if (r == prow) continue;
    auto& row = tab_[r];
    if (row[pcol].is_zero()) continue;
    Rational f = row[pcol];
    const mpq_srcptr fq = f.raw().get_mpq_t();
    for (int c : nz) {
      mpq_mul(t, fq, prow_vec[c].raw().get_mpq_t());
      mpq_sub(row[c].raw().get_mpq_t(), row[c].raw().get_mpq_t(), t);
    }
  }
  {
    auto& row = cost_row_;
    if (!row[pcol].is_zero()) {
      Rational f = row[pcol];
      const mpq_srcptr fq = f.raw().get_mpq_t();
      for (int c : nz) {
        mpq_mul(t, fq, prow_vec[c].raw().get_mpq_t());
        mpq_sub(row[c].raw().get_mpq_t(), row[c].raw().get_mpq_t(), t);
      }
    }
  }
  mpq_clear(t);
}

// One simplex phase. Returns false if the phase-2 problem is unbounded.
bool Simplex::phase(const std::vector<Rational>& cost, bool phase_one) {
  compute_cost_row(cost);
  for (;;) {
    // Bland: smallest eligible column index enters.
    int enter = kNoVar;
    bool from_lower = true;
    for (int c = 0; c < ncols_; ++c) {
      if (state_[c] == VarState::Basic) continue;
      if (!phase_one && cols_[c].kind == ColKind::Artificial) continue;
      if (cols_[c].has_upper && cols_[c].upper.is_zero()) continue;  // fixed at 0
      const int s = cost_row_[c].sign();
      if (state_[c] == VarState::AtLower && s < 0) {
        enter = c;
        from_lower = true;
        break;
      }
      if (state_[c] == VarState::AtUpper && s > 0) {
        enter = c;
        from_lower = false;
        break;
      }
    }
    if (enter == kNoVar) return true;  // optimal for this phase

    // Ratio test. The entering variable moves by t >= 0 away from its bound;
    // basic variables move by -d*t (from lower) or +d*t (from upper).
    bool limited = cols_[enter].has_upper;
    Rational best_t = limited ? cols_[enter].upper : Rational(0);
    int leave_row = kNoVar;
    int leave_var = kNoVar;
    bool leave_at_upper = false;
    for (int r = 0; r < m_; ++r) {
      const Rational& d = tab_[r][enter];
      const int ds = d.sign();
      if (ds == 0) continue;
      const int bvar = basis_[r];
      // Effective movement direction of this basic variable.
      const bool decreasing = from_lower ? ds > 0 : ds < 0;
      Rational t;
      bool hits_upper = false;
      if (decreasing) {
        t = bval_[r] / abs(d);
      } else {
        if (!cols_[bvar].has_upper) continue;
        t = (cols_[bvar].upper - bval_[r]) / abs(d);
        hits_upper = true;
      }
      // Bland tie-break: among rows attaining the minimum ratio, the one
      // whose basic variable has the smallest column index leaves. An exact
      // tie with the entering variable's own bound keeps the bound flip.
      const bool better = !limited || t < best_t;
      const bool tie = limited && leave_row != kNoVar && t == best_t && bvar < leave_var;
      if (better || tie) {
        best_t = t;
        limited = true;
        leave_row = r;
        leave_var = bvar;
        leave_at_upper = hits_upper;
      }
    }

    if (!limited) {
      if (phase_one) throw std::logic_error("phase-1 objective unbounded");
      return false;
    }

    if (leave_row == kNoVar) {
      // Bound flip: the entering variable runs to its other bound.
      const Rational& step = best_t;
      for (int r = 0; r < m_; ++r) {
        const Rational& d = tab_[r][enter];
        if (d.is_zero()) continue;
        if (from_lower)
          bval_[r] -= d * step;
        else
          bval_[r] += d * step;
      }
      state_[enter] = from_lower ? VarState::AtUpper : VarState::AtLower;
      continue;
    }

    // Basis exchange.
    for (int r = 0; r < m_; ++r) {
      if (r == leave_row) continue;
      const Rational& d = tab_[r][enter];
      if (d.is_zero()) continue;
      if (from_lower)
        bval_[r] -= d * best_t;
      else
        bval_[r] += d * best_t;
    }
    bval_[leave_row] = from_lower ? best_t : cols_[enter].upper - best_t;
    state_[leave_var] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
    state_[enter] = VarState::Basic;
    basis_[leave_row] = enter;
    pivot(leave_row, enter);
  }
}

void Simplex::drive_out_artificials() {
  for (int r = 0; r < m_; ++r) {
    if (cols_[basis_[r]].kind != ColKind::Artificial) continue;
    assert(bval_[r].is_zero());
    int pc = kNoVar;
    for (int c = 0; c < first_artificial_; ++c) {
      if (state_[c] == VarState::Basic) continue;
      if (!tab_[r][c].is_zero()) {
        pc = c;
        break;
      }
    }
    if (pc == kNoVar) {
      // Redundant constraint; drop the row.
      state_[basis_[r]] = VarState::AtLower;
      tab_.erase(tab_.begin() + r);
      bval_.erase(bval_.begin() + r);
      basis_.erase(basis_.begin() + r);
      --m_;
      --r;
      continue;
    }
    // Value-preserving exchange: the row's value is zero, the entering
    // variable keeps its current bound value.
    const int art = basis_[r];
    state_[art] = VarState::AtLower;
    const Rational entering_value =
        state_[pc] == VarState::AtUpper ? cols_[pc].upper : Rational(0);
    basis_[r] = pc;
    state_[pc] = VarState::Basic;
    pivot(r, pc);
    bval_[r] = entering_value;
  }
}

void Simplex::strip_artificial_columns() {
  if (first_artificial_ == ncols_) return;
  for (auto& row : tab_) row.resize(first_artificial_);
  cols_.resize(first_artificial_);
  state_.resize(first_artificial_);
  ncols_ = first_artificial_;
}

LpSolution Simplex::extract() {
  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.primal.assign(model_.num_vars(), Rational(0));

  std::vector<Rational> internal(ncols_, Rational(0));
  for (int c = 0; c < ncols_; ++c)
    if (state_[c] == VarState::AtUpper) internal[c] = cols_[c].upper;
  for (int r = 0; r < m_; ++r) internal[basis_[r]] = bval_[r];

  for (int i = 0; i < model_.num_vars(); ++i)
    if (is_fixed_[i]) sol.primal[i] = fixed_value_[i];
  for (int c = 0; c < ncols_; ++c) {
    const Column& col = cols_[c];
    if (col.model_var == kNoVar) continue;
    switch (col.kind) {
      case ColKind::Shifted:
        sol.primal[col.model_var] = col.shift + internal[c];
        break;
      case ColKind::Negated:
        sol.primal[col.model_var] = col.shift - internal[c];
        break;
      case ColKind::FreePos:
        sol.primal[col.model_var] += internal[c];
        break;
      case ColKind::FreeNeg:
        sol.primal[col.model_var] -= internal[c];
        break;
      default:
        break;
    }
  }

  for (int i = 0; i < model_.num_vars(); ++i)
    sol.objective += model_.objective[i] * sol.primal[i];

  for (int r = 0; r < m_; ++r) {
    const int mv = cols_[basis_[r]].model_var;
    if (mv != kNoVar) sol.basis.push_back(mv);
  }
  std::sort(sol.basis.begin(), sol.basis.end());
  sol.basis.erase(std::unique(sol.basis.begin(), sol.basis.end()), sol.basis.end());
  return sol;
}

LpSolution Simplex::run() {
  try {
    build();
  } catch (Infeasible&) {
    LpSolution sol;
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  bool need_phase_one = false;
  for (int r = 0; r < m_; ++r)
    if (cols_[basis_[r]].kind == ColKind::Artificial) need_phase_one = true;

  if (need_phase_one) {
    std::vector<Rational> art_cost(ncols_, Rational(0));
    for (int c = first_artificial_; c < ncols_; ++c) art_cost[c] = Rational(1);
    phase(art_cost, /*phase_one=*/true);
    Rational art_sum;
    for (int r = 0; r < m_; ++r)
      if (cols_[basis_[r]].kind == ColKind::Artificial) art_sum += bval_[r];
    if (!art_sum.is_zero()) {
      LpSolution sol;
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    drive_out_artificials();
  }
  strip_artificial_columns();

  std::vector<Rational> cost(ncols_, Rational(0));
  const bool maximize = model_.sense == Sense::Maximize;
  for (int c = 0; c < ncols_; ++c) {
    const Column& col = cols_[c];
    if (col.model_var == kNoVar) continue;
    const Rational& oc = model_.objective[col.model_var];
    if (oc.is_zero()) continue;
    Rational v = oc;
    if (col.kind == ColKind::Negated || col.kind == ColKind::FreeNeg) v = -v;
    if (maximize) v = -v;
    cost[c] = v;
  }
  if (!phase(cost, /*phase_one=*/false)) {
    LpSolution sol;
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  return extract();
}

}  // namespace

LpSolution solve_lp(const LpModel& model) {
  for (const auto& row : model.rows)
    if (static_cast<int>(row.coeffs.size()) != model.num_vars())
      throw std::invalid_argument("solve_lp: row width does not match variable count");
  Simplex s(model);
  return s.run();
}

}  // namespace robsel
