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

#include "robsel/adversary_continuous.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace robsel {

std::pair<Rational, Rational> maximize_envelope(const EnvelopeProblem& ep) {
  if (ep.hi < ep.lo) throw std::invalid_argument("maximize_envelope: empty interval");
  auto eval = [&](const Rational& t) { return min(ep.f1.at(t), ep.f2.at(t)); };

  Rational best_t = ep.lo;
  Rational best_v = eval(ep.lo);
  auto offer = [&](const Rational& t) {
    Rational v = eval(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  };
  if (ep.f1.slope != ep.f2.slope) {
    // crossing point of the two lines, clamped into the interval
    Rational t = (ep.f2.intercept - ep.f1.intercept) / (ep.f1.slope - ep.f2.slope);
    if (t > ep.lo && t < ep.hi) offer(t);
  }
  offer(ep.hi);
  return {best_t, best_v};
}

Scenario greedy_worst_scenario(const Instance& inst, const SelectionSolution& x,
                               const DualCandidate& dual) {
  if (dual.beta.sign() < 0) throw std::invalid_argument("greedy_worst_scenario: beta must be >= 0");
  const auto in_x = x.indicator(inst.n);
  Scenario scen;
  scen.deltas.assign(inst.n, Rational(0));
  Rational remaining = inst.gamma;
  for (int i = 0; i < inst.n; ++i) {
    if (remaining.sign() <= 0) break;
    Rational slack = dual.alpha - inst.nominal_cost[i];
    if (in_x[i]) slack += dual.beta;
    if (slack.sign() <= 0) continue;
    Rational delta = min(min(slack, inst.deviation[i]), remaining);
    scen.deltas[i] = delta;
    remaining -= delta;
  }
  return scen;
}

namespace {

// ---------------------------------------------------------------------------
// Interval scan
// ---------------------------------------------------------------------------

// Per-breakpoint tabulation for one cost family: count and sum of family
// values <= h_j for every breakpoint h_j.
struct FamilyTable {
  std::vector<long> count;
  std::vector<Rational> sum;

  FamilyTable() = default;
  FamilyTable(std::vector<Rational> values, const std::vector<Rational>& breakpoints) {
    std::sort(values.begin(), values.end());
    count.resize(breakpoints.size());
    sum.resize(breakpoints.size());
    size_t pos = 0;
    Rational running;
    for (size_t j = 0; j < breakpoints.size(); ++j) {
      while (pos < values.size() && values[pos] <= breakpoints[j]) {
        running += values[pos];
        ++pos;
      }
      count[j] = static_cast<long>(pos);
      sum[j] = running;
    }
  }

  // sum over family of [t - v]_+ for t at breakpoint index j.
  Rational positive_part_sum(size_t j, const Rational& t) const {
    return Rational(count[j]) * t - sum[j];
  }
};

struct ScanBest {
  bool has = false;
  Rational value;
  DualCandidate dual;

  void offer(const Rational& v, const Rational& alpha, const Rational& beta) {
    if (!has || v > value) {
      has = true;
      value = v;
      dual = DualCandidate{alpha, beta};
    }
  }
};

std::vector<Rational> distinct_breakpoints(const std::vector<Rational>& lo,
                                           const std::vector<Rational>& hi) {
  std::vector<Rational> d = lo;
  d.insert(d.end(), hi.begin(), hi.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

// Maximizes q*alpha - max(S_lo(alpha) - budget, S_hi(alpha)) over alpha,
// where S_lo/S_hi are the positive-part sums over the lo/hi cost families.
// This is the beta = 0 branch of the scan; also the whole scan for the
// two-stage adversarial problem.
void scan_beta_zero(const std::vector<Rational>& breaks, const FamilyTable& lo,
                    const FamilyTable& hi, long q, const Rational& budget, ScanBest& best) {
  const size_t l = breaks.size();
  if (l == 0) return;
  auto offer_interval = [&](size_t j, const Rational& a, const Rational& b) {
    AffineFunction f1{Rational(q - lo.count[j]), lo.sum[j] + budget};
    AffineFunction f2{Rational(q - hi.count[j]), hi.sum[j]};
    auto [t, v] = maximize_envelope(EnvelopeProblem{a, b, f1, f2});
    best.offer(v, t, Rational(0));
  };
  if (l == 1) {
    offer_interval(0, breaks[0], breaks[0]);
    return;
  }
  for (size_t j = 0; j + 1 < l; ++j) offer_interval(j, breaks[j], breaks[j + 1]);
}

}  // namespace

AdversarialResult arec_continuous_intervals(const Instance& inst, const SelectionSolution& x) {
  if (!inst.is_continuous())
    throw std::invalid_argument("arec_continuous_intervals: continuous budget model required");
  if (x.size() != inst.p)
    throw std::invalid_argument("arec_continuous_intervals: |X_x| must equal p");

  const int n = inst.n, p = inst.p, k = inst.k;

  if (k == 0) {
    // The whole budget goes to the first-stage items; the repair is x itself.
    Rational dev_sum, base;
    for (int i : x.items) {
      dev_sum += inst.deviation[i];
      base += inst.nominal_cost[i];
    }
    Rational spend = min(inst.gamma, dev_sum);
    Scenario scen;
    scen.deltas.assign(n, Rational(0));
    Rational remaining = spend;
    for (int i : x.items) {
      if (remaining.sign() <= 0) break;
      Rational d = min(inst.deviation[i], remaining);
      scen.deltas[i] = d;
      remaining -= d;
    }
    return {base + spend, scen};
  }

  const auto in_x = x.indicator(n);
  std::vector<Rational> all_lo = inst.nominal_cost;
  std::vector<Rational> all_hi = inst.upper_costs();
  std::vector<Rational> x_lo, x_hi, c_lo, c_hi;
  for (int i = 0; i < n; ++i) {
    if (in_x[i]) {
      x_lo.push_back(all_lo[i]);
      x_hi.push_back(all_hi[i]);
    } else {
      c_lo.push_back(all_lo[i]);
      c_hi.push_back(all_hi[i]);
    }
  }

  const auto breaks = distinct_breakpoints(all_lo, all_hi);
  const size_t l = breaks.size();
  FamilyTable t_all_lo(all_lo, breaks), t_all_hi(all_hi, breaks);
  FamilyTable t_x_lo(x_lo, breaks), t_x_hi(x_hi, breaks);
  FamilyTable t_c_lo(c_lo, breaks), t_c_hi(c_hi, breaks);

  ScanBest best;

  // Branch with beta = 0.
  scan_beta_zero(breaks, t_all_lo, t_all_hi, p, inst.gamma, best);

  // gamma = alpha + beta fixed at a breakpoint, alpha scanned below it.
  for (size_t t = 0; t < l; ++t) {
    const Rational& gamma_v = breaks[t];
    const Rational base1 = Rational(p - k) * gamma_v - t_x_lo.positive_part_sum(t, gamma_v) +
                           inst.gamma;
    const Rational base2 = Rational(p - k) * gamma_v - t_x_hi.positive_part_sum(t, gamma_v);
    auto offer = [&](size_t j, const Rational& a, const Rational& b) {
      AffineFunction f1{Rational(k - t_c_lo.count[j]), base1 + t_c_lo.sum[j]};
      AffineFunction f2{Rational(k - t_c_hi.count[j]), base2 + t_c_hi.sum[j]};
      auto [alpha_v, v] = maximize_envelope(EnvelopeProblem{a, b, f1, f2});
      best.offer(v, alpha_v, gamma_v - alpha_v);
    };
    if (t == 0) offer(0, gamma_v, gamma_v);
    for (size_t j = 0; j + 1 <= t; ++j) offer(j, breaks[j], breaks[j + 1]);
  }

  // alpha fixed at a breakpoint, gamma scanned above it.
  for (size_t t = 0; t < l; ++t) {
    const Rational& alpha_v = breaks[t];
    const Rational base1 =
        Rational(k) * alpha_v - t_c_lo.positive_part_sum(t, alpha_v) + inst.gamma;
    const Rational base2 = Rational(k) * alpha_v - t_c_hi.positive_part_sum(t, alpha_v);
    auto offer = [&](size_t j, const Rational& a, const Rational& b) {
      AffineFunction f1{Rational(p - k - t_x_lo.count[j]), base1 + t_x_lo.sum[j]};
      AffineFunction f2{Rational(p - k - t_x_hi.count[j]), base2 + t_x_hi.sum[j]};
      auto [gamma_v, v] = maximize_envelope(EnvelopeProblem{a, b, f1, f2});
      best.offer(v, alpha_v, gamma_v - alpha_v);
    };
    if (t + 1 == l) offer(t, alpha_v, alpha_v);
    for (size_t j = t; j + 1 < l; ++j) offer(j, breaks[j], breaks[j + 1]);
  }

  Scenario worst = greedy_worst_scenario(inst, x, best.dual);
  return {best.value, worst};
}

AdversarialResult a2st_continuous(const Instance& inst, const SelectionSolution& x) {
  if (!inst.is_continuous())
    throw std::invalid_argument("a2st_continuous: continuous budget model required");
  if (x.size() > inst.p) throw std::invalid_argument("a2st_continuous: |X_x| must be at most p");

  const int want = inst.p - x.size();
  Scenario scen;
  scen.deltas.assign(inst.n, Rational(0));
  if (want == 0) return {Rational(0), scen};

  const auto in_x = x.indicator(inst.n);
  std::vector<Rational> lo, hi;
  std::vector<int> ids;
  for (int i = 0; i < inst.n; ++i) {
    if (in_x[i]) continue;
    lo.push_back(inst.nominal_cost[i]);
    hi.push_back(inst.upper_cost(i));
    ids.push_back(i);
  }

  const auto breaks = distinct_breakpoints(lo, hi);
  FamilyTable t_lo(lo, breaks), t_hi(hi, breaks);
  ScanBest best;
  scan_beta_zero(breaks, t_lo, t_hi, want, inst.gamma, best);

  // Greedy scenario restricted to the remaining items (beta = 0).
  Rational remaining = inst.gamma;
  for (size_t j = 0; j < ids.size() && remaining.sign() > 0; ++j) {
    Rational slack = best.dual.alpha - lo[j];
    if (slack.sign() <= 0) continue;
    Rational d = min(min(slack, inst.deviation[ids[j]]), remaining);
    scen.deltas[ids[j]] = d;
    remaining -= d;
  }
  return {best.value, scen};
}

// ---------------------------------------------------------------------------
// Level-raising algorithm
// ---------------------------------------------------------------------------

namespace {

struct LevelSide {
  // static, in ascending (nominal, id) order
  std::vector<Rational> lo;
  std::vector<Rational> hi;
  std::vector<Rational> lo_prefix;
  std::vector<int> ids;
  long size = 0;

  // dynamic
  Rational level;
  long next_untouched = 0;
  std::priority_queue<Rational, std::vector<Rational>, std::greater<Rational>> heap;
  std::vector<Rational> sat_costs;   // ascending; saturations pop in order
  std::vector<Rational> sat_prefix;  // sat_costs prefix sums

  void init(const Instance& inst, const std::vector<int>& items) {
    std::vector<std::pair<Rational, int>> order;
    for (int i : items) order.push_back({inst.nominal_cost[i], i});
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    size = static_cast<long>(order.size());
    lo_prefix.assign(1, Rational(0));
    sat_prefix.assign(1, Rational(0));
    for (auto& [c, id] : order) {
      lo.push_back(c);
      hi.push_back(inst.upper_cost(id));
      ids.push_back(id);
      lo_prefix.push_back(lo_prefix.back() + c);
    }
    if (size > 0) level = lo.front();
  }

  long sat() const { return static_cast<long>(sat_costs.size()); }
  long active() const { return static_cast<long>(heap.size()); }
  bool exhausted() const { return next_untouched >= size && active() == 0; }

  // Saturate actives that reached their upper bound, then activate items
  // whose nominal cost has been reached.
  void sweep() {
    while (!heap.empty() && heap.top() <= level) {
      sat_costs.push_back(heap.top());
      sat_prefix.push_back(sat_prefix.back() + heap.top());
      heap.pop();
    }
    while (next_untouched < size && lo[next_untouched] <= level) {
      const Rational& up = hi[next_untouched];
      if (up <= level) {
        sat_costs.push_back(up);
        sat_prefix.push_back(sat_prefix.back() + up);
      } else {
        heap.push(up);
      }
      ++next_untouched;
    }
  }

  // Zero-cost moves: while no item sits at the level, jump to the next
  // nominal cost. The implied scenario is unchanged.
  void normalize() {
    while (active() == 0 && next_untouched < size) {
      level = lo[next_untouched];
      sweep();
    }
  }

  // j-th smallest current cost (1-based); requires 1 <= j <= size.
  Rational cost_at(long j) const {
    if (j <= sat()) return sat_costs[j - 1];
    if (j <= sat() + active()) return level;
    return lo[next_untouched + (j - sat() - active()) - 1];
  }

  // Sum of the j smallest current costs.
  Rational sum_smallest(long j) const {
    if (j <= 0) return Rational(0);
    if (j <= sat()) return sat_prefix[j];
    Rational s = sat_prefix[sat()];
    const long in_active = std::min(j - sat(), active());
    s += Rational(in_active) * level;
    const long in_untouched = j - sat() - in_active;
    if (in_untouched > 0)
      s += lo_prefix[next_untouched + in_untouched] - lo_prefix[next_untouched];
    return s;
  }

  // Active items among the j cheapest; saturated items sort first on ties.
  long active_among(long j) const { return std::clamp(j - sat(), 0L, active()); }

  // Cheapest current cost strictly above the probe value, if any. The probe
  // may exceed this side's level, so the untouched suffix must be searched,
  // not just its head.
  std::optional<Rational> cheapest_above(const Rational& probe) const {
    std::optional<Rational> best;
    auto consider = [&](const Rational& v) {
      if (v > probe && (!best || v < *best)) best = v;
    };
    auto it = std::upper_bound(sat_costs.begin(), sat_costs.end(), probe);
    if (it != sat_costs.end()) consider(*it);
    if (active() > 0) consider(level);
    auto ut = std::upper_bound(lo.begin() + next_untouched, lo.end(), probe);
    if (ut != lo.end()) consider(*ut);
    return best;
  }
};

// Exact ratio comparison helpers: ratios are (numerator, denominator) pairs
// of small nonnegative longs.
bool ratio_ge(long n1, long d1, long n2, long d2) {
  return static_cast<long long>(n1) * d2 >= static_cast<long long>(n2) * d1;
}

}  // namespace

AdversarialResult arec_continuous_levels(const Instance& inst, const SelectionSolution& x,
                                         const LevelsEventFn& on_event) {
  if (!inst.is_continuous())
    throw std::invalid_argument("arec_continuous_levels: continuous budget model required");
  if (x.size() != inst.p)
    throw std::invalid_argument("arec_continuous_levels: |X_x| must equal p");
  if (inst.k == 0) return arec_continuous_intervals(inst, x);

  const long p = inst.p, k = inst.k;
  const auto in_x = x.indicator(inst.n);
  std::vector<int> complement;
  for (int i = 0; i < inst.n; ++i)
    if (!in_x[i]) complement.push_back(i);

  LevelSide sx, sc;
  sx.init(inst, x.items);
  sc.init(inst, complement);
  sx.sweep();
  sc.sweep();
  sx.normalize();
  sc.normalize();

  const long jmin = std::max(p - k, p - sc.size);
  const long jmax = std::min(p, sx.size);  // = p

  // mu(j) = cost_x(j+1) - cost_c(p-j); nondecreasing in j, so the minimizers
  // of F_j = sum_x(j) + sum_c(p-j) form the interval [j_lo, j_hi].
  auto mu_sign = [&](long j) {
    Rational a = sx.cost_at(j + 1);
    Rational b = sc.cost_at(p - j);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
  };
  auto find_jlo = [&]() {
    long lo_j = jmin, hi_j = jmax;  // first j with mu(j) >= 0, else jmax
    while (lo_j < hi_j) {
      long mid = lo_j + (hi_j - lo_j) / 2;
      if (mu_sign(mid) >= 0)
        hi_j = mid;
      else
        lo_j = mid + 1;
    }
    return lo_j;
  };
  auto find_jhi = [&]() {
    long lo_j = jmin, hi_j = jmax;  // first j with mu(j) > 0, else jmax
    while (lo_j < hi_j) {
      long mid = lo_j + (hi_j - lo_j) / 2;
      if (mu_sign(mid) > 0)
        hi_j = mid;
      else
        lo_j = mid + 1;
    }
    return lo_j;
  };

  Rational objective = [&]() {
    long j = find_jlo();
    return sx.sum_smallest(j) + sc.sum_smallest(p - j);
  }();
  Rational budget = inst.gamma;

  auto emit = [&]() {
    if (on_event) on_event(sx.level, sc.level, objective);
  };
  emit();

  enum class Move { X, C, Joint };

  while (budget.sign() > 0) {
    const bool can_x = sx.active() > 0;
    const bool can_c = sc.active() > 0;
    if (!can_x && !can_c) break;

    const long j_lo = find_jlo();
    const long j_hi = find_jhi();

    long num_x = can_x ? sx.active_among(j_lo) : 0;
    long num_c = can_c ? sc.active_among(p - j_hi) : 0;

    Move move;
    long num = 0, den = 0;
    if (can_x && can_c && sx.level == sc.level) {
      // Joint raising: minimize the number of rising selected items over the
      // optimal split window; the count is piecewise linear in j with at most
      // four breakpoints.
      long best_joint = -1;
      auto consider_j = [&](long j) {
        if (j < j_lo || j > j_hi) return;
        long v = sx.active_among(j) + sc.active_among(p - j);
        if (best_joint < 0 || v < best_joint) best_joint = v;
      };
      consider_j(j_lo);
      consider_j(j_hi);
      consider_j(sx.sat());
      consider_j(sx.sat() + sx.active());
      consider_j(p - sc.sat());
      consider_j(p - sc.sat() - sc.active());
      const long den_joint = sx.active() + sc.active();
      if (ratio_ge(best_joint, den_joint, num_x, sx.active()) &&
          ratio_ge(best_joint, den_joint, num_c, sc.active())) {
        move = Move::Joint;
        num = best_joint;
        den = den_joint;
      } else if (ratio_ge(num_x, sx.active(), num_c, sc.active())) {
        move = Move::X;
        num = num_x;
        den = sx.active();
      } else {
        move = Move::C;
        num = num_c;
        den = sc.active();
      }
    } else if (can_x && can_c) {
      if (ratio_ge(num_x, sx.active(), num_c, sc.active())) {
        move = Move::X;
        num = num_x;
        den = sx.active();
      } else {
        move = Move::C;
        num = num_c;
        den = sc.active();
      }
    } else if (can_x) {
      move = Move::X;
      num = num_x;
      den = sx.active();
    } else {
      move = Move::C;
      num = num_c;
      den = sc.active();
    }

    // Step size: nearest event among activations, saturations, the other
    // level, the cheapest opposite-side cost above, and budget exhaustion.
    std::optional<Rational> step;
    auto consider_step = [&](const Rational& s) {
      if (s.sign() <= 0) return;
      if (!step || s < *step) step = s;
    };
    auto side_events = [&](const LevelSide& side) {
      if (side.next_untouched < side.size)
        consider_step(side.lo[side.next_untouched] - side.level);
      if (side.active() > 0) consider_step(side.heap.top() - side.level);
    };
    if (move == Move::Joint) {
      side_events(sx);
      side_events(sc);
    } else {
      LevelSide& mover = move == Move::X ? sx : sc;
      LevelSide& other = move == Move::X ? sc : sx;
      side_events(mover);
      if (other.active() > 0 && other.level > mover.level)
        consider_step(other.level - mover.level);
      if (auto cross = other.cheapest_above(mover.level)) consider_step(*cross - mover.level);
    }
    consider_step(budget / Rational(den));
    assert(step.has_value());
    Rational t = min(*step, budget / Rational(den));

    if (move == Move::Joint || move == Move::X) sx.level += t;
    if (move == Move::Joint || move == Move::C) sc.level += t;
    budget -= t * Rational(den);
    objective += t * Rational(num);

    sx.sweep();
    sc.sweep();
    sx.normalize();
    sc.normalize();
    emit();
  }

  Scenario worst;
  worst.deltas.assign(inst.n, Rational(0));
  auto fill = [&](const LevelSide& side) {
    for (long j = 0; j < side.size; ++j) {
      const int id = side.ids[j];
      Rational c = robsel::max(side.lo[j], robsel::min(side.hi[j], side.level));
      worst.deltas[id] = c - side.lo[j];
    }
  };
  // A side that never started (empty) is skipped; its items do not exist.
  if (sx.size > 0) fill(sx);
  if (sc.size > 0) fill(sc);
  return {objective, worst};
}

}  // namespace robsel
