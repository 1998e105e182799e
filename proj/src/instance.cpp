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

#include "robsel/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace robsel {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<long>::max()))
      return Rational::parse(std::to_string(u));
    return Rational(static_cast<long>(u));
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InstanceError(field + ": " + e.what());
    }
  }
  if (v.is_number_float())
    throw InstanceError(field + ": floating-point JSON numbers are not exact; use a decimal string");
  throw InstanceError(field + ": expected integer or decimal string");
}

std::vector<Rational> rational_array(const json& v, const std::string& field, int n) {
  if (!v.is_array()) throw InstanceError(field + ": expected an array");
  if (static_cast<int>(v.size()) != n)
    throw InstanceError(field + ": expected length " + std::to_string(n) + ", got " +
                        std::to_string(v.size()));
  std::vector<Rational> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(rational_from_json(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

int int_field(const json& doc, const std::string& field) {
  if (!doc.contains(field)) throw InstanceError("missing field: " + field);
  const json& v = doc.at(field);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw InstanceError(field + ": expected an integer");
  auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw InstanceError(field + ": out of range");
  return static_cast<int>(x);
}

/// Renders a rational for the instance JSON: plain integers stay JSON
/// integers, everything else becomes a decimal or fraction string.
void append_value(std::string& out, const Rational& r) {
  if (r.is_integer()) {
    out += r.to_string();
  } else if (r.has_finite_decimal()) {
    out += '"';
    out += r.to_decimal_string();
    out += '"';
  } else {
    out += '"';
    out += r.to_string();
    out += '"';
  }
}

void append_array(std::string& out, const std::vector<Rational>& xs) {
  out += '[';
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    append_value(out, xs[i]);
  }
  out += ']';
}

}  // namespace

std::vector<Rational> Instance::upper_costs() const {
  std::vector<Rational> up(n);
  for (int i = 0; i < n; ++i) up[i] = upper_cost(i);
  return up;
}

Rational Instance::deviation_sum() const {
  Rational s;
  for (const auto& d : deviation) s += d;
  return s;
}

std::vector<Rational> Scenario::realized_costs(const Instance& inst) const {
  std::vector<Rational> c(inst.n);
  for (int i = 0; i < inst.n; ++i) c[i] = inst.nominal_cost[i] + deltas[i];
  return c;
}

bool Scenario::is_feasible(const Instance& inst) const {
  if (static_cast<int>(deltas.size()) != inst.n) return false;
  Rational sum;
  int raised = 0;
  for (int i = 0; i < inst.n; ++i) {
    if (deltas[i].sign() < 0 || deltas[i] > inst.deviation[i]) return false;
    if (inst.is_discrete()) {
      if (!deltas[i].is_zero()) {
        if (deltas[i] != inst.deviation[i]) return false;
        ++raised;
      }
    }
    sum += deltas[i];
  }
  if (inst.is_continuous()) return sum <= inst.gamma;
  return Rational(raised) <= inst.gamma;
}

std::vector<char> SelectionSolution::indicator(int n) const {
  std::vector<char> x(n, 0);
  for (int i : items) x[i] = 1;
  return x;
}

bool SelectionSolution::contains(int i) const {
  return std::binary_search(items.begin(), items.end(), i);
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> v;
  if (inst.n < 1) v.push_back("n must be positive");
  if (inst.p < 1) v.push_back("p must be positive");
  if (inst.p > inst.n) v.push_back("p exceeds n");
  if (inst.k < 0) v.push_back("k must be nonnegative");
  if (inst.k > inst.p) v.push_back("k exceeds p");
  if (inst.gamma.sign() < 0) v.push_back("gamma must be nonnegative");
  if (inst.budget_model == BudgetModel::Discrete && !inst.gamma.is_integer())
    v.push_back("discrete budget must be integer");
  auto check_vec = [&](const std::vector<Rational>& xs, const char* name, const char* msg) {
    if (static_cast<int>(xs.size()) != inst.n) {
      v.push_back(std::string(name) + " has wrong length");
      return;
    }
    for (const auto& x : xs)
      if (x.sign() < 0) {
        v.push_back(msg);
        return;
      }
  };
  check_vec(inst.first_stage_cost, "first_stage_cost", "first-stage cost must be nonnegative");
  check_vec(inst.nominal_cost, "nominal_cost", "nominal cost must be nonnegative");
  check_vec(inst.deviation, "deviation", "deviation must be nonnegative");
  return v;
}

Instance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceError("instance document must be a JSON object");

  Instance inst;
  inst.n = int_field(doc, "n");
  inst.p = int_field(doc, "p");
  inst.k = int_field(doc, "k");

  if (!doc.contains("gamma")) throw InstanceError("missing field: gamma");
  inst.gamma = rational_from_json(doc.at("gamma"), "gamma");

  if (!doc.contains("budget_model")) throw InstanceError("missing field: budget_model");
  const json& bm = doc.at("budget_model");
  if (!bm.is_string()) throw InstanceError("budget_model: expected \"continuous\" or \"discrete\"");
  std::string model = bm.get<std::string>();
  if (model == "continuous") {
    inst.budget_model = BudgetModel::Continuous;
  } else if (model == "discrete") {
    inst.budget_model = BudgetModel::Discrete;
  } else {
    throw InstanceError("budget_model: unknown value '" + model + "'");
  }

  if (inst.n < 1) throw InstanceError("n must be positive");
  if (!doc.contains("nominal_cost")) throw InstanceError("missing field: nominal_cost");
  inst.nominal_cost = rational_array(doc.at("nominal_cost"), "nominal_cost", inst.n);
  if (!doc.contains("deviation")) throw InstanceError("missing field: deviation");
  inst.deviation = rational_array(doc.at("deviation"), "deviation", inst.n);
  if (doc.contains("first_stage_cost")) {
    inst.first_stage_cost = rational_array(doc.at("first_stage_cost"), "first_stage_cost", inst.n);
  } else {
    inst.first_stage_cost.assign(inst.n, Rational(0));
  }

  auto violations = validate_instance(inst);
  if (!violations.empty()) throw InstanceError(violations.front());
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "{";
  out += "\"n\":" + std::to_string(inst.n);
  out += ",\"p\":" + std::to_string(inst.p);
  out += ",\"k\":" + std::to_string(inst.k);
  out += ",\"gamma\":";
  append_value(out, inst.gamma);
  out += ",\"budget_model\":\"";
  out += inst.is_continuous() ? "continuous" : "discrete";
  out += "\",\"first_stage_cost\":";
  append_array(out, inst.first_stage_cost);
  out += ",\"nominal_cost\":";
  append_array(out, inst.nominal_cost);
  out += ",\"deviation\":";
  append_array(out, inst.deviation);
  out += "}";
  return out;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

bool operator==(const Instance& a, const Instance& b) {
  return a.n == b.n && a.p == b.p && a.k == b.k && a.gamma == b.gamma &&
         a.budget_model == b.budget_model && a.first_stage_cost == b.first_stage_cost &&
         a.nominal_cost == b.nominal_cost && a.deviation == b.deviation;
}

}  // namespace robsel
