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

#include "robsel/robust_continuous.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "robsel/adversary_continuous.hpp"
#include "robsel/lp.hpp"
#include "robsel/lp_builders.hpp"
#include "robsel/parallel.hpp"
#include "robsel/robust_discrete.hpp"
#include "robsel/selection.hpp"

namespace robsel {

std::vector<Rational> pi_candidates(int n, int p, RobustProblem variant) {
  if (n < 1) throw std::invalid_argument("pi_candidates: n must be positive");
  const long qmax = variant == RobustProblem::Rrec ? n : p;
  const long rmax = variant == RobustProblem::Rrec ? n + 1 : n;
  std::vector<Rational> out{Rational(0), Rational(1)};
  for (long r = 1; r <= rmax; ++r)
    for (long q = 0; q <= qmax && q <= r; ++q) out.emplace_back(q, r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DominanceReduction dominance_preprocess(const Instance& inst) {
  if (!inst.is_continuous())
    throw std::invalid_argument("dominance_preprocess: continuous budget model required");

  const auto upper = inst.upper_costs();
  auto dominates = [&](int a, int b) {
    // a is at least as good as b on every cost component
    return inst.first_stage_cost[a] <= inst.first_stage_cost[b] &&
           inst.nominal_cost[a] <= inst.nominal_cost[b] && upper[a] <= upper[b];
  };

  DominanceReduction red;
  std::vector<int> alive(inst.n);
  for (int i = 0; i < inst.n; ++i) alive[i] = i;

  bool changed = true;
  while (changed && static_cast<int>(alive.size()) > inst.p) {
    changed = false;
    for (size_t li = 0; li < alive.size(); ++li) {
      const int l = alive[li];
      int count = 0;
      for (int k : alive)
        if (k != l && dominates(k, l)) ++count;
      if (count >= inst.p) {
        red.removed.push_back(l);
        alive.erase(alive.begin() + li);
        changed = true;
        break;
      }
    }
  }

  const int m = static_cast<int>(alive.size());
  for (int l : alive) {
    int count = 0;
    for (int k : alive)
      if (k != l && dominates(l, k)) ++count;
    if (count >= m - inst.p) red.forced_in.push_back(l);
  }

  // A first-stage cost no optimal solution can pay: anything above the cost
  // of the worst conceivable plan.
  Rational barrier(1);
  for (int i = 0; i < inst.n; ++i) barrier += inst.first_stage_cost[i] + upper[i];

  red.index_map.resize(inst.n);
  for (int i = 0; i < inst.n; ++i) red.index_map[i] = i;
  red.reduced = inst;
  for (int l : red.removed) red.reduced.first_stage_cost[l] = barrier;
  return red;
}

namespace {

struct Cell {
  int excluded = -1;  // item fixed outside the LP; -1 for the all-items branch
  int xj = 0;
  Rational pi;
  long Z = 0, Zb = 0, Zp = 0, Zbp = 0;
  Rational offset;
  Rational frac_z;     // rescaled second-stage parts of the held-out item
  Rational frac_zbar;
};

using CellKey = std::tuple<int, int, Rational, long, long, long, long>;

CellKey key_of(const Cell& c) { return {c.excluded, c.xj, c.pi, c.Z, c.Zb, c.Zp, c.Zbp}; }

long to_long(const Rational& r) { return r.numerator().get_si(); }

/// Componentwise-minimal integer pairs (a, b) in [0,amax] x [0,bmax] with
/// pi*a + (1-pi)*b >= need. The optimum's true overlap counts dominate one of
/// them, so restricting the guesses to this frontier loses nothing.
std::vector<std::pair<long, long>> minimal_overlap_guesses(const Rational& pi,
                                                           const Rational& need, long amax,
                                                           long bmax) {
  std::vector<std::pair<long, long>> out;
  if (amax < 0 || bmax < 0) return out;
  const Rational one_minus = Rational(1) - pi;
  if (one_minus.is_zero()) {
    long a = need.sign() > 0 ? to_long(ceil(need)) : 0;
    if (a <= amax) out.push_back({a, 0});
    return out;
  }
  if (pi.is_zero()) {
    long b = need.sign() > 0 ? to_long(ceil(need)) : 0;
    if (b <= bmax) out.push_back({0, b});
    return out;
  }
  long prev_b = -1;
  for (long a = 0; a <= amax; ++a) {
    Rational rhs = need - pi * Rational(a);
    long b = rhs.sign() > 0 ? to_long(ceil(rhs / one_minus)) : 0;
    if (b > bmax) continue;
    if (prev_b >= 0 && b >= prev_b) continue;
    out.push_back({a, b});
    prev_b = b;
    if (b == 0) break;
  }
  return out;
}

struct CellEval {
  bool feasible = false;
  Rational value;
  std::vector<int> x_items;
};

CellEval evaluate_rrec_cell(const Instance& inst, const Cell& cell) {
  RrecSubproblemSpec spec;
  spec.items.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i)
    if (i != cell.excluded) spec.items.push_back(i);
  spec.px = inst.p - (cell.excluded >= 0 ? cell.xj : 0);
  spec.Z = static_cast<int>(cell.Z);
  spec.Zbar = static_cast<int>(cell.Zb);
  spec.Zp = static_cast<int>(cell.Zp);
  spec.Zbarp = static_cast<int>(cell.Zbp);
  spec.pi = cell.pi;

  LpModel lp = build_rrec_tu_subproblem(inst, spec);
  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::Infeasible) return {};
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("rrec subproblem: unexpected LP status");
  if (!is_zero_one(sol.primal))
    throw std::logic_error("rrec subproblem returned a fractional vertex");

  CellEval ev;
  ev.feasible = true;
  ev.value = sol.objective + cell.offset;
  const int m = static_cast<int>(spec.items.size());
  for (int i = 0; i < m; ++i)
    if (sol.primal[i] == Rational(1)) ev.x_items.push_back(spec.items[i]);
  if (cell.excluded >= 0 && cell.xj) ev.x_items.push_back(cell.excluded);
  std::sort(ev.x_items.begin(), ev.x_items.end());

  // Mapping-back consistency: y_i = pi z_i + (1-pi) zbar_i must form a
  // p-item fractional repair overlapping the first stage in at least p-k.
  {
    const Rational one_minus = Rational(1) - cell.pi;
    Rational y_sum, overlap;
    for (int i = 0; i < m; ++i) {
      Rational y = cell.pi * sol.primal[m + i] + one_minus * sol.primal[2 * m + i];
      y_sum += y;
      if (sol.primal[i] == Rational(1)) overlap += y;
    }
    // contribution of the item held out of the LP
    if (cell.excluded >= 0) {
      Rational yj = cell.pi * cell.frac_z + one_minus * cell.frac_zbar;
      y_sum += yj;
      if (cell.xj) overlap += yj;
    }
    if (y_sum != Rational(inst.p) || overlap < Rational(inst.p - inst.k))
      throw std::logic_error("rrec subproblem: mapped-back repair is infeasible");
  }
  return ev;
}

RobustResult finalize(const Instance& inst, const std::vector<int>& items, const Rational& value) {
  RobustResult res;
  res.first_stage.items = items;
  for (int i : items) res.first_stage.value += inst.first_stage_cost[i];
  res.value = value;
  return res;
}

}  // namespace

RobustResult solve_rrec_continuous(const Instance& inst) {
  if (!inst.is_continuous())
    throw std::invalid_argument("solve_rrec_continuous: continuous budget model required");
  const long n = inst.n, p = inst.p, k = inst.k;

  if (k == 0) return minmax_budgeted(inst);
  if (k == p) {
    // First stage decouples: cheapest items by first-stage cost.
    auto x = solve_selection(inst.first_stage_cost, inst.p);
    auto adv = arec_continuous_intervals(inst, x);
    return finalize(inst, x.items, x.value + adv.value);
  }

  std::vector<Cell> cells;
  std::set<CellKey> seen;
  auto add_cell = [&](Cell c) {
    if (seen.insert(key_of(c)).second) cells.push_back(std::move(c));
  };

  const Rational need_base = Rational(p - k);

  // All-integral branch: pi is forced by the chosen cardinalities, except at
  // Z = Zbar = p where the balance holds for every pi and the objective is
  // linear in it, so both endpoints are candidates.
  auto add_integral_cell = [&](const Rational& pi, long Z, long Zb) {
    for (auto [a, b] : minimal_overlap_guesses(pi, need_base, std::min(p, Z), std::min(p, Zb)))
      add_cell(Cell{-1, 0, pi, Z, Zb, a, b, inst.gamma * pi, Rational(0), Rational(0)});
  };
  for (long Z = p; Z <= n; ++Z) {
    for (long Zb = 0; Zb <= p; ++Zb) {
      if (Z == Zb) {
        if (Z != p) continue;
        add_integral_cell(Rational(0), Z, Zb);
        add_integral_cell(Rational(1), Z, Zb);
      } else {
        add_integral_cell(Rational(p - Zb) / Rational(Z - Zb), Z, Zb);
      }
    }
  }

  // One-fractional branches: guess the item, its first-stage bit and pi; the
  // fractional value is pinned by the cardinality balance.
  const auto pis = pi_candidates(static_cast<int>(n), static_cast<int>(p), RobustProblem::Rrec);
  const Rational one(1);
  for (int j = 0; j < n; ++j) {
    for (int xj = 0; xj <= 1; ++xj) {
      const long px = p - xj;
      if (px > n - 1) continue;
      for (const auto& pi : pis) {
        // Fractional rescaled nominal part: z_j in (0,1), zbar_j = 0.
        if (pi.sign() > 0 && pi < one) {
          for (long Zb = 0; Zb <= n - 1; ++Zb) {
            // z_j = (p - Zb)/pi - (Z - Zb); strictly inside (0,1) for at most
            // one integer Z, located around (p - Zb)/pi + Zb - 1.
            Rational t = Rational(p - Zb) / pi + Rational(Zb);
            long z_low = to_long(floor(t)) - 1;
            for (long Z = std::max(0L, z_low); Z <= std::min(n - 1, z_low + 2); ++Z) {
              Rational zj = (Rational(p - Zb) - Rational(Z - Zb) * pi) / pi;
              if (zj.sign() <= 0 || zj >= one) continue;
              Rational need = need_base;
              if (xj) need -= pi * zj;
              Rational offset = inst.gamma * pi + pi * inst.nominal_cost[j] * zj;
              if (xj) offset += inst.first_stage_cost[j];
              for (auto [a, b] :
                   minimal_overlap_guesses(pi, need, std::min(px, Z), std::min(px, Zb))) {
                add_cell(Cell{j, xj, pi, Z, Zb, a, b, offset, zj, Rational(0)});
              }
            }
          }
        }
        // Fractional rescaled upper part: zbar_j in (0,1), z_j = 1.
        if (pi < one) {
          const Rational rest = one - pi;
          for (long Z = 0; Z <= n - 1; ++Z) {
            Rational t = (Rational(p) - pi * Rational(Z + 1)) / rest;
            long zb_low = to_long(floor(t)) - 1;
            for (long Zb = std::max(0L, zb_low); Zb <= std::min(n - 1, zb_low + 2); ++Zb) {
              Rational zbj = (Rational(p) - pi * Rational(Z + 1) - rest * Rational(Zb)) / rest;
              if (zbj.sign() <= 0 || zbj >= one) continue;
              Rational need = need_base;
              if (xj) need -= pi + rest * zbj;
              Rational offset = inst.gamma * pi + pi * inst.nominal_cost[j] +
                                rest * inst.upper_cost(j) * zbj;
              if (xj) offset += inst.first_stage_cost[j];
              for (auto [a, b] :
                   minimal_overlap_guesses(pi, need, std::min(px, Z), std::min(px, Zb))) {
                add_cell(Cell{j, xj, pi, Z, Zb, a, b, offset, Rational(1), zbj});
              }
            }
          }
        }
      }
    }
  }

  std::vector<CellEval> evals(cells.size());
  parallel_blocks(cells.size(), [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) evals[i] = evaluate_rrec_cell(inst, cells[i]);
  });

  std::optional<size_t> best;
  for (size_t i = 0; i < evals.size(); ++i) {
    if (!evals[i].feasible) continue;
    if (!best || evals[i].value < evals[*best].value) best = i;
  }
  if (!best) throw std::logic_error("solve_rrec_continuous: no feasible cell");

  const auto& win = evals[*best];
  RobustResult res = finalize(inst, win.x_items, win.value);
  // The winning cell's value must be the true objective of its first stage.
  auto adv = arec_continuous_intervals(inst, res.first_stage);
  if (res.first_stage.value + adv.value != res.value)
    throw std::logic_error("solve_rrec_continuous: cell value mismatch on re-evaluation");
  return res;
}

RobustResult solve_r2st_continuous(const Instance& inst) {
  if (!inst.is_continuous())
    throw std::invalid_argument("solve_r2st_continuous: continuous budget model required");
  const long n = inst.n, p = inst.p;

  struct R2Cell {
    Rational pi;
    long X, Z, Zb;
  };
  std::vector<R2Cell> cells;
  std::set<std::tuple<Rational, long, long, long>> seen;
  auto add_cell = [&](const Rational& pi, long X, long Z, long Zb) {
    if (Z < 0 || Z > n || Zb < 0 || Zb > n) return;
    if (seen.insert({pi, X, Z, Zb}).second) cells.push_back(R2Cell{pi, X, Z, Zb});
  };

  const Rational one(1);
  for (const auto& pi : pi_candidates(static_cast<int>(n), static_cast<int>(p),
                                      RobustProblem::R2st)) {
    if (pi.is_zero()) {
      for (long X = 0; X <= p; ++X) add_cell(pi, X, 0, p - X);
    } else if (pi == one) {
      for (long X = 0; X <= p; ++X) add_cell(pi, X, p - X, 0);
    } else {
      for (long X = 0; X <= p; ++X) {
        for (long Z = 0; Z <= n; ++Z) {
          Rational zb = (Rational(p - X) - pi * Rational(Z)) / (one - pi);
          if (!zb.is_integer() || zb.sign() < 0 || zb > Rational(n)) continue;
          add_cell(pi, X, Z, to_long(zb));
        }
      }
    }
  }

  std::vector<CellEval> evals(cells.size());
  parallel_blocks(cells.size(), [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const auto& cell = cells[i];
      R2stSubproblemSpec spec;
      spec.X = static_cast<int>(cell.X);
      spec.Z = static_cast<int>(cell.Z);
      spec.Zbar = static_cast<int>(cell.Zb);
      spec.pi = cell.pi;
      LpModel lp = build_r2st_tu_subproblem(inst, spec);
      LpSolution sol = solve_lp(lp);
      if (sol.status == LpStatus::Infeasible) continue;
      if (sol.status != LpStatus::Optimal)
        throw std::logic_error("r2st subproblem: unexpected LP status");
      if (!is_zero_one(sol.primal))
        throw std::logic_error("r2st subproblem returned a fractional vertex");
      evals[i].feasible = true;
      evals[i].value = sol.objective + inst.gamma * cell.pi;
      for (int v = 0; v < inst.n; ++v)
        if (sol.primal[v] == Rational(1)) evals[i].x_items.push_back(v);

      // Mapping-back consistency: first stage plus fractional completion
      // must have total size exactly p.
      Rational total;
      const Rational one_minus = Rational(1) - cell.pi;
      for (int v = 0; v < inst.n; ++v)
        total += sol.primal[v] + cell.pi * sol.primal[inst.n + v] +
                 one_minus * sol.primal[2 * inst.n + v];
      if (total != Rational(inst.p))
        throw std::logic_error("r2st subproblem: mapped-back completion has wrong size");
    }
  });

  std::optional<size_t> best;
  for (size_t i = 0; i < evals.size(); ++i) {
    if (!evals[i].feasible) continue;
    if (!best || evals[i].value < evals[*best].value) best = i;
  }
  if (!best) throw std::logic_error("solve_r2st_continuous: no feasible cell");

  const auto& win = evals[*best];
  RobustResult res = finalize(inst, win.x_items, win.value);
  auto adv = a2st_continuous(inst, res.first_stage);
  if (res.first_stage.value + adv.value != res.value)
    throw std::logic_error("solve_r2st_continuous: cell value mismatch on re-evaluation");
  return res;
}

}  // namespace robsel
