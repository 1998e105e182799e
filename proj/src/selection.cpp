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

#include "robsel/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace robsel {

namespace {

struct CostRef {
  const Rational* cost;
  int index;
};

bool cost_index_less(const CostRef& a, const CostRef& b) {
  int c = mpq_cmp(a.cost->raw().get_mpq_t(), b.cost->raw().get_mpq_t());
  if (c != 0) return c < 0;
  return a.index < b.index;
}

std::vector<CostRef> make_refs(const std::vector<Rational>& costs, const std::vector<int>& subset) {
  std::vector<CostRef> refs;
  refs.reserve(subset.size());
  for (int i : subset) refs.push_back({&costs[i], i});
  return refs;
}

}  // namespace

SelectionSolution solve_selection(const std::vector<Rational>& costs, int p) {
  const int n = static_cast<int>(costs.size());
  if (p < 0 || p > n) throw std::invalid_argument("solve_selection: p out of range");
  SelectionSolution sol;
  if (p == 0) return sol;

  std::vector<CostRef> refs;
  refs.reserve(n);
  for (int i = 0; i < n; ++i) refs.push_back({&costs[i], i});
  if (p < n) std::nth_element(refs.begin(), refs.begin() + (p - 1), refs.end(), cost_index_less);

  sol.items.reserve(p);
  for (int i = 0; i < p; ++i) {
    sol.items.push_back(refs[i].index);
    sol.value += *refs[i].cost;
  }
  std::sort(sol.items.begin(), sol.items.end());
  return sol;
}

SelectionSolution solve_irec(const Instance& inst, const SelectionSolution& x, const Scenario& scen) {
  if (x.size() != inst.p) throw std::invalid_argument("solve_irec: |X_x| must equal p");
  const auto costs = scen.realized_costs(inst);
  const int p = inst.p, k = inst.k;

  auto inside = make_refs(costs, x.items);
  std::vector<char> taken(inst.n, 0);

  SelectionSolution y;
  // p-k cheapest items kept from the first stage.
  if (p - k > 0) {
    std::nth_element(inside.begin(), inside.begin() + (p - k - 1), inside.end(), cost_index_less);
    for (int i = 0; i < p - k; ++i) {
      y.items.push_back(inside[i].index);
      y.value += *inside[i].cost;
      taken[inside[i].index] = 1;
    }
  }
  // k cheapest among everything not yet taken (re-taking first-stage items is
  // allowed; the overlap constraint is one-sided).
  if (k > 0) {
    std::vector<CostRef> rest;
    rest.reserve(inst.n - (p - k));
    for (int i = 0; i < inst.n; ++i)
      if (!taken[i]) rest.push_back({&costs[i], i});
    if (k < static_cast<int>(rest.size()))
      std::nth_element(rest.begin(), rest.begin() + (k - 1), rest.end(), cost_index_less);
    for (int i = 0; i < k; ++i) {
      y.items.push_back(rest[i].index);
      y.value += *rest[i].cost;
    }
  }
  std::sort(y.items.begin(), y.items.end());
  return y;
}

SelectionSolution solve_i2st(const Instance& inst, const SelectionSolution& x, const Scenario& scen) {
  if (x.size() > inst.p) throw std::invalid_argument("solve_i2st: |X_x| must be at most p");
  const auto costs = scen.realized_costs(inst);
  const int want = inst.p - x.size();

  std::vector<char> in_x(inst.n, 0);
  for (int i : x.items) in_x[i] = 1;
  std::vector<CostRef> outside;
  outside.reserve(inst.n - x.size());
  for (int i = 0; i < inst.n; ++i)
    if (!in_x[i]) outside.push_back({&costs[i], i});

  SelectionSolution y;
  if (want == 0) return y;
  if (want < static_cast<int>(outside.size()))
    std::nth_element(outside.begin(), outside.begin() + (want - 1), outside.end(), cost_index_less);
  for (int i = 0; i < want; ++i) {
    y.items.push_back(outside[i].index);
    y.value += *outside[i].cost;
  }
  std::sort(y.items.begin(), y.items.end());
  return y;
}

std::pair<DualCandidate, OrderStatistics> optimal_dual_pair(const Instance& inst,
                                                            const SelectionSolution& x,
                                                            const Scenario& scen) {
  if (x.size() != inst.p) throw std::invalid_argument("optimal_dual_pair: |X_x| must equal p");
  if (inst.k == 0)
    throw std::invalid_argument("optimal_dual_pair: k = 0 is the trivial case y = x");
  const auto costs = scen.realized_costs(inst);
  const int p = inst.p, k = inst.k;

  auto kth_smallest = [&](std::vector<CostRef> refs, int j) {
    std::nth_element(refs.begin(), refs.begin() + (j - 1), refs.end(), cost_index_less);
    return *refs[j - 1].cost;
  };

  OrderStatistics os;
  {
    std::vector<int> all(inst.n);
    for (int i = 0; i < inst.n; ++i) all[i] = i;
    os.b = kth_smallest(make_refs(costs, all), p);
  }
  if (p - k >= 1) os.b1 = kth_smallest(make_refs(costs, x.items), p - k);
  if (inst.n - p >= k) {
    std::vector<int> complement;
    complement.reserve(inst.n - p);
    auto in_x = x.indicator(inst.n);
    for (int i = 0; i < inst.n; ++i)
      if (!in_x[i]) complement.push_back(i);
    os.b2 = kth_smallest(make_refs(costs, complement), k);
  }

  // One of the two candidate pairs attains the incremental optimum. The
  // order-statistic comparison b1 <= b alone is not tie-safe (equal costs can
  // make the p cheapest items violate the overlap requirement), so both
  // feasible candidates are priced and the better one returned; ties keep
  // the beta = 0 form.
  DualCandidate dual{os.b, Rational(0)};
  if (os.b1 && os.b2 && *os.b1 > *os.b2) {
    DualCandidate exchange{*os.b2, *os.b1 - *os.b2};
    if (incremental_dual_value(inst, x, costs, exchange) >
        incremental_dual_value(inst, x, costs, dual))
      dual = exchange;
  }
  return {dual, os};
}

Rational incremental_dual_value(const Instance& inst, const SelectionSolution& x,
                                const std::vector<Rational>& costs, const DualCandidate& dual) {
  const auto in_x = x.indicator(inst.n);
  Rational v = Rational(inst.p) * dual.alpha + Rational(inst.p - inst.k) * dual.beta;
  for (int i = 0; i < inst.n; ++i) {
    Rational t = dual.alpha - costs[i];
    if (in_x[i]) t += dual.beta;
    v -= pos(t);
  }
  return v;
}

Rational incremental_value_by_split(const Instance& inst, const SelectionSolution& x,
                                    const std::vector<Rational>& costs) {
  const int p = inst.p, k = inst.k, n = inst.n;
  auto in_x = x.indicator(n);
  std::vector<int> inside = x.items, outside;
  for (int i = 0; i < n; ++i)
    if (!in_x[i]) outside.push_back(i);

  auto sorted_costs = [&](const std::vector<int>& subset) {
    std::vector<Rational> cs;
    cs.reserve(subset.size());
    for (int i : subset) cs.push_back(costs[i]);
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  auto cin = sorted_costs(inside);
  auto cout = sorted_costs(outside);

  auto prefix = [](const std::vector<Rational>& cs) {
    std::vector<Rational> pre(cs.size() + 1);
    for (size_t i = 0; i < cs.size(); ++i) pre[i + 1] = pre[i] + cs[i];
    return pre;
  };
  auto pin = prefix(cin);
  auto pout = prefix(cout);

  const int jmin = std::max(p - k, p - static_cast<int>(outside.size()));
  bool first = true;
  Rational best;
  for (int j = jmin; j <= p; ++j) {
    Rational v = pin[j] + pout[p - j];
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace robsel
