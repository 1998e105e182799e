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

#include "robsel/adversary_discrete.hpp"

#include <algorithm>
#include <stdexcept>

namespace robsel {

namespace {

long gamma_count(const Instance& inst) {
  // The discrete budget is integral and only its value up to n matters.
  Rational g = min(inst.gamma, Rational(inst.n));
  return static_cast<long>(g.numerator().get_si());
}

std::vector<Rational> sorted_values(const std::vector<Rational>& costs,
                                    const std::vector<int>& items) {
  std::vector<Rational> v;
  v.reserve(items.size());
  for (int i : items) v.push_back(costs[i]);
  std::sort(v.begin(), v.end());
  return v;
}

// Values at 1-based sorted positions [lo, hi] with hi clamped to the size;
// empty when the lo-th order statistic does not exist.
void append_window(const std::vector<Rational>& sorted, long lo, long hi,
                   std::vector<Rational>& out) {
  const long n = static_cast<long>(sorted.size());
  if (n == 0 || lo > n || lo > hi) return;
  lo = std::max(lo, 1L);
  hi = std::min(hi, n);
  for (long j = lo; j <= hi; ++j) out.push_back(sorted[j - 1]);
}

std::vector<Rational> dedup_sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct GainPick {
  Rational total;
  std::vector<int> raised;
};

// Sum of the largest <= limit strictly positive gains; deterministic pick
// (larger gain first, then smaller index).
GainPick best_gains(const std::vector<Rational>& gains, long limit) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(gains.size()); ++i)
    if (gains[i].sign() > 0) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (gains[a] != gains[b]) return gains[b] < gains[a];
    return a < b;
  });
  if (static_cast<long>(idx.size()) > limit) idx.resize(limit);
  GainPick pick;
  for (int i : idx) pick.total += gains[i];
  pick.raised = std::move(idx);
  return pick;
}

}  // namespace

CandidateSet candidate_pairs_arec(const Instance& inst, const SelectionSolution* x) {
  if (!inst.is_discrete())
    throw std::invalid_argument("candidate_pairs_arec: discrete budget model required");
  if (inst.k < 1) throw std::invalid_argument("candidate_pairs_arec: requires k >= 1");
  if (x && x->size() != inst.p)
    throw std::invalid_argument("candidate_pairs_arec: |X_x| must equal p");

  const long n = inst.n, p = inst.p, k = inst.k;
  const long g = gamma_count(inst);

  std::vector<int> all(inst.n);
  for (int i = 0; i < inst.n; ++i) all[i] = i;
  const auto upper = inst.upper_costs();

  const auto all_lo = sorted_values(inst.nominal_cost, all);
  const auto all_hi = sorted_values(upper, all);

  // Window for the p-th smallest overall value under any scenario. With a
  // zero budget no item can be raised, so the upper-cost windows vanish and
  // candidates collapse to nominal order statistics.
  std::vector<Rational> c_sigma_p;
  append_window(all_lo, p, p + g, c_sigma_p);
  if (g > 0) append_window(all_hi, 1, p, c_sigma_p);
  c_sigma_p = dedup_sorted(c_sigma_p);

  // Windows for the (p-k)-th value inside the first stage and the k-th value
  // outside it; either from the given x or the x-independent supersets.
  std::vector<Rational> c_inside, c_outside;
  CandidateSource inside_src, outside_src;
  if (x) {
    inside_src = CandidateSource::NuPK;
    outside_src = CandidateSource::VarsigmaK;
    const auto in_x = x->indicator(inst.n);
    std::vector<int> inside, outside;
    for (int i = 0; i < inst.n; ++i) (in_x[i] ? inside : outside).push_back(i);
    const auto in_lo = sorted_values(inst.nominal_cost, inside);
    const auto in_hi = sorted_values(upper, inside);
    const auto out_lo = sorted_values(inst.nominal_cost, outside);
    const auto out_hi = sorted_values(upper, outside);
    if (p - k >= 1) {
      append_window(in_lo, p - k, p - k + g, c_inside);
      if (g > 0) append_window(in_hi, 1, p - k, c_inside);
    }
    append_window(out_lo, k, k + g, c_outside);
    if (g > 0) append_window(out_hi, 1, k, c_outside);
  } else {
    inside_src = CandidateSource::SigmaPK;
    outside_src = CandidateSource::SigmaK;
    if (p - k >= 1) {
      append_window(all_lo, p - k, n - k + g, c_inside);
      if (g > 0) append_window(all_hi, 1, n - k, c_inside);
    }
    append_window(all_lo, k, k + p + g, c_outside);
    if (g > 0) append_window(all_hi, 1, k + p, c_outside);
  }
  c_inside = dedup_sorted(c_inside);
  c_outside = dedup_sorted(c_outside);

  CandidateSet set;
  for (const auto& a : c_sigma_p)
    set.pairs.push_back(CandidatePair{DualCandidate{a, Rational(0)}, CandidateSource::SigmaP,
                                      std::nullopt});
  for (const auto& a : c_outside)
    for (const auto& b : c_inside) {
      if (!(b > a)) continue;
      set.pairs.push_back(CandidatePair{DualCandidate{a, b - a}, outside_src, inside_src});
    }
  return set;
}

AdversarialResult arec_discrete(const Instance& inst, const SelectionSolution& x) {
  if (!inst.is_discrete())
    throw std::invalid_argument("arec_discrete: discrete budget model required");
  if (x.size() != inst.p) throw std::invalid_argument("arec_discrete: |X_x| must equal p");

  const long g = gamma_count(inst);
  Scenario worst;
  worst.deltas.assign(inst.n, Rational(0));

  if (inst.k == 0) {
    // The repair is x itself; the adversary raises the largest deviations
    // inside the first stage.
    Rational value;
    std::vector<int> order = x.items;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (inst.deviation[a] != inst.deviation[b]) return inst.deviation[b] < inst.deviation[a];
      return a < b;
    });
    for (int i : x.items) value += inst.nominal_cost[i];
    for (long j = 0; j < g && j < static_cast<long>(order.size()); ++j) {
      const int i = order[j];
      if (inst.deviation[i].sign() <= 0) break;
      value += inst.deviation[i];
      worst.deltas[i] = inst.deviation[i];
    }
    return {value, worst};
  }

  const auto set = candidate_pairs_arec(inst, &x);
  const auto in_x = x.indicator(inst.n);

  bool have = false;
  Rational best_value;
  std::vector<int> best_raised;
  for (const auto& cand : set.pairs) {
    const Rational& alpha = cand.dual.alpha;
    const Rational& beta = cand.dual.beta;
    Rational base = Rational(inst.p) * alpha + Rational(inst.p - inst.k) * beta;
    std::vector<Rational> gains(inst.n);
    for (int i = 0; i < inst.n; ++i) {
      Rational shifted = alpha - inst.nominal_cost[i];
      if (in_x[i]) shifted += beta;
      Rational at_lo = pos(shifted);
      base -= at_lo;
      gains[i] = at_lo - pos(shifted - inst.deviation[i]);
    }
    auto pick = best_gains(gains, g);
    Rational value = base + pick.total;
    if (!have || value > best_value) {
      have = true;
      best_value = value;
      best_raised = std::move(pick.raised);
    }
  }
  for (int i : best_raised) worst.deltas[i] = inst.deviation[i];
  return {best_value, worst};
}

CandidateSet candidate_alphas_a2st(const Instance& inst) {
  if (!inst.is_discrete())
    throw std::invalid_argument("candidate_alphas_a2st: discrete budget model required");
  std::vector<Rational> v{Rational(0)};
  for (int i = 0; i < inst.n; ++i) {
    v.push_back(inst.nominal_cost[i]);
    v.push_back(inst.upper_cost(i));
  }
  CandidateSet set;
  set.alphas = dedup_sorted(std::move(v));
  return set;
}

AdversarialResult a2st_discrete(const Instance& inst, const SelectionSolution& x) {
  if (!inst.is_discrete())
    throw std::invalid_argument("a2st_discrete: discrete budget model required");
  if (x.size() > inst.p) throw std::invalid_argument("a2st_discrete: |X_x| must be at most p");

  const long want = inst.p - x.size();
  Scenario worst;
  worst.deltas.assign(inst.n, Rational(0));
  if (want == 0) return {Rational(0), worst};

  const long g = gamma_count(inst);
  const auto in_x = x.indicator(inst.n);
  const auto set = candidate_alphas_a2st(inst);

  bool have = false;
  Rational best_value;
  std::vector<int> best_raised;
  for (const auto& alpha : set.alphas) {
    Rational base = Rational(want) * alpha;
    std::vector<Rational> gains(inst.n);
    for (int i = 0; i < inst.n; ++i) {
      if (in_x[i]) continue;  // the adversary gains nothing on removed items
      Rational at_lo = pos(alpha - inst.nominal_cost[i]);
      base -= at_lo;
      gains[i] = at_lo - pos(alpha - inst.upper_cost(i));
    }
    auto pick = best_gains(gains, g);
    Rational value = base + pick.total;
    if (!have || value > best_value) {
      have = true;
      best_value = value;
      best_raised = std::move(pick.raised);
    }
  }
  for (int i : best_raised) worst.deltas[i] = inst.deviation[i];
  return {best_value, worst};
}

}  // namespace robsel
