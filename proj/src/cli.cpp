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

#include "robsel/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "robsel/adversary_continuous.hpp"
#include "robsel/adversary_discrete.hpp"
#include "robsel/generator.hpp"
#include "robsel/instance.hpp"
#include "robsel/lp_format.hpp"
#include "robsel/oracle.hpp"
#include "robsel/prng.hpp"
#include "robsel/robust_continuous.hpp"
#include "robsel/robust_discrete.hpp"
#include "robsel/selection.hpp"

namespace robsel {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CliError {
  int code;
  std::string message;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{1, "cannot open file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw CliError{1, "cannot write file: " + path};
  out << content;
}

/// The instance document may carry two optional extra fields used only by
/// the incremental/adversarial problems: "first_stage" (1-based item ids)
/// and "scenario" (per-item deviations).
struct SolveInput {
  Instance inst;
  std::optional<SelectionSolution> first_stage;
  std::optional<Scenario> scenario;
};

SolveInput load_solve_input(const std::string& path) {
  const std::string text = read_file(path);
  SolveInput input;
  input.inst = parse_instance(text);
  const auto doc = nlohmann::json::parse(text);
  if (doc.contains("first_stage")) {
    SelectionSolution x;
    for (const auto& v : doc.at("first_stage")) {
      const int id = v.get<int>();
      if (id < 1 || id > input.inst.n) throw CliError{1, "first_stage: item id out of range"};
      x.items.push_back(id - 1);
      x.value += input.inst.first_stage_cost[id - 1];
    }
    std::sort(x.items.begin(), x.items.end());
    input.first_stage = std::move(x);
  }
  if (doc.contains("scenario")) {
    Scenario scen;
    for (const auto& v : doc.at("scenario")) {
      if (v.is_string())
        scen.deltas.push_back(Rational::parse(v.get<std::string>()));
      else if (v.is_number_integer() || v.is_number_unsigned())
        scen.deltas.push_back(Rational(static_cast<long>(v.get<std::int64_t>())));
      else
        throw CliError{1, "scenario: deviations must be integers or decimal strings"};
    }
    if (static_cast<int>(scen.deltas.size()) != input.inst.n)
      throw CliError{1, "scenario: wrong length"};
    if (!scen.is_feasible(input.inst)) throw CliError{1, "scenario: infeasible deviations"};
    input.scenario = std::move(scen);
  }
  return input;
}

ordered_json items_json(const std::vector<int>& items) {
  ordered_json arr = ordered_json::array();
  for (int i : items) arr.push_back(i + 1);
  return arr;
}

ordered_json scenario_json(const Scenario& scen) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : scen.deltas) arr.push_back(d.to_string());
  return arr;
}

enum class Problem { Irec, I2st, Arec, A2st, Rrec, R2st };

Problem parse_problem(const std::string& name) {
  if (name == "irec") return Problem::Irec;
  if (name == "i2st") return Problem::I2st;
  if (name == "arec") return Problem::Arec;
  if (name == "a2st") return Problem::A2st;
  if (name == "rrec") return Problem::Rrec;
  if (name == "r2st") return Problem::R2st;
  throw CliError{1, "unknown problem: " + name};
}

BudgetModel parse_model(const std::string& name) {
  if (name == "continuous") return BudgetModel::Continuous;
  if (name == "discrete") return BudgetModel::Discrete;
  throw CliError{1, "unknown budget model: " + name};
}

CliError mismatch(const std::string& algorithm, const std::string& why) {
  return CliError{2, "algorithm '" + algorithm + "' " + why};
}

GenParams gen_params(const RunConfig& cfg) {
  GenParams params;
  params.seed = cfg.seed;
  params.n = cfg.n;
  params.p = cfg.p;
  params.k = cfg.k;
  if (cfg.gamma) params.gamma = Rational::parse(*cfg.gamma);
  params.budget_model = parse_model(cfg.budget_model);
  params.first_stage_max = cfg.first_stage_max;
  params.nominal_max = cfg.nominal_max;
  params.deviation_max = cfg.deviation_max;
  return params;
}

/// Random feasible objects for verification batches.
SelectionSolution random_first_stage(Prng& rng, const Instance& inst, bool partial) {
  SelectionSolution x;
  const int size = partial ? static_cast<int>(rng.range(0, inst.p)) : inst.p;
  x.items = rng.sample(inst.n, size);
  for (int i : x.items) x.value += inst.first_stage_cost[i];
  return x;
}

Scenario random_scenario(Prng& rng, const Instance& inst) {
  Scenario scen;
  scen.deltas.assign(inst.n, Rational(0));
  if (inst.is_discrete()) {
    const long g = static_cast<long>(min(inst.gamma, Rational(inst.n)).numerator().get_si());
    for (int i : rng.sample(inst.n, static_cast<int>(rng.below(g + 1))))
      scen.deltas[i] = inst.deviation[i];
    return scen;
  }
  Rational total;
  for (int i = 0; i < inst.n; ++i) {
    scen.deltas[i] = inst.deviation[i] * Rational(rng.range(0, 4), 4);
    total += scen.deltas[i];
  }
  if (total > inst.gamma && total.sign() > 0) {
    const Rational scale = inst.gamma / total;
    for (auto& d : scen.deltas) d *= scale;
  }
  return scen;
}

struct SolveOutcome {
  Rational value;
  std::optional<SelectionSolution> witness;
  std::optional<Scenario> worst;
};

SolveOutcome run_algorithm(const Instance& inst, Problem problem, const std::string& algorithm,
                           const std::optional<SelectionSolution>& x,
                           const std::optional<Scenario>& scen) {
  const bool continuous = inst.is_continuous();
  auto need_x = [&]() -> const SelectionSolution& {
    if (!x) throw CliError{1, "this problem needs a \"first_stage\" field in the instance file"};
    return *x;
  };
  auto need_scen = [&]() -> const Scenario& {
    if (!scen) throw CliError{1, "this problem needs a \"scenario\" field in the instance file"};
    return *scen;
  };

  switch (problem) {
    case Problem::Irec: {
      if (algorithm == "auto") {
        auto y = solve_irec(inst, need_x(), need_scen());
        return {y.value, y, std::nullopt};
      }
      if (algorithm == "oracle") {
        auto rep = oracle_incremental(inst, need_x(), need_scen(), IncrementalProblem::Irec);
        return {rep.value, rep.witness_y, std::nullopt};
      }
      throw mismatch(algorithm, "is not valid for the incremental problem");
    }
    case Problem::I2st: {
      if (algorithm == "auto") {
        auto y = solve_i2st(inst, need_x(), need_scen());
        return {y.value, y, std::nullopt};
      }
      if (algorithm == "oracle") {
        auto rep = oracle_incremental(inst, need_x(), need_scen(), IncrementalProblem::I2st);
        return {rep.value, rep.witness_y, std::nullopt};
      }
      throw mismatch(algorithm, "is not valid for the incremental problem");
    }
    case Problem::Arec: {
      // The witness is the optimal repair under the worst scenario.
      auto finish = [&](const Rational& value, Scenario worst) -> SolveOutcome {
        auto y = solve_irec(inst, need_x(), worst);
        return {value, std::move(y), std::move(worst)};
      };
      if (continuous) {
        if (algorithm == "auto" || algorithm == "intervals") {
          auto r = arec_continuous_intervals(inst, need_x());
          return finish(r.value, std::move(r.worst));
        }
        if (algorithm == "levels") {
          auto r = arec_continuous_levels(inst, need_x());
          return finish(r.value, std::move(r.worst));
        }
        if (algorithm == "lp" || algorithm == "oracle") {
          auto rep = oracle_adversarial_continuous(inst, need_x(), AdversarialProblem::Arec);
          return finish(rep.value, std::move(*rep.witness_scenario));
        }
        throw mismatch(algorithm, "is not valid for the continuous adversarial problem");
      }
      if (algorithm == "auto") {
        auto r = arec_discrete(inst, need_x());
        return finish(r.value, std::move(r.worst));
      }
      if (algorithm == "oracle") {
        auto rep = oracle_adversarial_discrete(inst, need_x(), AdversarialProblem::Arec);
        return finish(rep.value, std::move(*rep.witness_scenario));
      }
      throw mismatch(algorithm, "is not valid for the discrete adversarial problem");
    }
    case Problem::A2st: {
      SelectionSolution empty;
      const SelectionSolution& xs = x ? *x : empty;
      auto finish = [&](const Rational& value, Scenario worst) -> SolveOutcome {
        auto y = solve_i2st(inst, xs, worst);
        return {value, std::move(y), std::move(worst)};
      };
      if (continuous) {
        if (algorithm == "auto") {
          auto r = a2st_continuous(inst, xs);
          return finish(r.value, std::move(r.worst));
        }
        if (algorithm == "lp" || algorithm == "oracle") {
          auto rep = oracle_adversarial_continuous(inst, xs, AdversarialProblem::A2st);
          return finish(rep.value, std::move(*rep.witness_scenario));
        }
        throw mismatch(algorithm, "is not valid for the continuous adversarial problem");
      }
      if (algorithm == "auto") {
        auto r = a2st_discrete(inst, xs);
        return finish(r.value, std::move(r.worst));
      }
      if (algorithm == "oracle") {
        auto rep = oracle_adversarial_discrete(inst, xs, AdversarialProblem::A2st);
        return finish(rep.value, std::move(*rep.witness_scenario));
      }
      throw mismatch(algorithm, "is not valid for the discrete adversarial problem");
    }
    case Problem::Rrec:
    case Problem::R2st: {
      const bool rrec = problem == Problem::Rrec;
      const RobustProblem rp = rrec ? RobustProblem::Rrec : RobustProblem::R2st;
      if (algorithm == "auto") {
        if (continuous) {
          auto r = rrec ? solve_rrec_continuous(inst) : solve_r2st_continuous(inst);
          return {r.value, r.first_stage, std::nullopt};
        }
        if (auto sc = special_cases(inst, rp)) return {sc->result.value, sc->result.first_stage, std::nullopt};
        auto r = solve_exact_enumeration(inst, rp);
        return {r.value, r.first_stage, std::nullopt};
      }
      if (algorithm == "enum") {
        auto r = solve_exact_enumeration(inst, rp);
        return {r.value, r.first_stage, std::nullopt};
      }
      if (algorithm == "oracle") {
        auto rep = oracle_robust(inst, rp);
        return {rep.value, rep.witness_x, std::nullopt};
      }
      if (algorithm == "approx") {
        if (continuous) throw mismatch(algorithm, "applies only to the discrete budget model");
        Rational alpha(1);
        for (int i = 0; i < inst.n; ++i) {
          const Rational up = inst.upper_cost(i);
          if (up.sign() == 0) continue;
          const Rational ratio = inst.nominal_cost[i] / up;
          if (ratio < alpha) alpha = ratio;
        }
        if (alpha.sign() <= 0)
          throw CliError{1, "approximation premise fails: an item has zero nominal cost but "
                            "positive deviation"};
        auto r = rrec ? approx_nominal_rrec(inst, alpha) : approx_r2st(inst, alpha);
        return {r.result.value, r.result.first_stage, std::nullopt};
      }
      throw mismatch(algorithm, "is not valid for the robust problem");
    }
  }
  throw CliError{1, "unreachable"};
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Problem problem = parse_problem(cfg.problem);
    if (cfg.instance_path.empty()) throw CliError{1, "solve: --instance is required"};
    SolveInput input = load_solve_input(cfg.instance_path);

    const auto start = Clock::now();
    SolveOutcome outcome =
        run_algorithm(input.inst, problem, cfg.algorithm, input.first_stage, input.scenario);
    const double ms = elapsed_ms(start);

    ordered_json rec;
    rec["problem"] = cfg.problem;
    rec["algorithm"] = cfg.algorithm;
    rec["value"] = outcome.value.to_string();
    rec["value_decimal"] = outcome.value.to_double();
    if (outcome.witness) rec["witness_items"] = items_json(outcome.witness->items);
    if (outcome.worst) rec["worst_scenario"] = scenario_json(*outcome.worst);
    rec["wall_time_ms"] = ms;
    const std::string line = rec.dump();
    out << line << "\n";
    if (!cfg.output_path.empty()) write_file(cfg.output_path, line + "\n");
    return 0;
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Instance inst = generate_instance(gen_params(cfg));
    const std::string text = serialize_instance(inst) + "\n";
    if (cfg.output_path.empty())
      out << text;
    else
      write_file(cfg.output_path, text);
    return 0;
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Problem problem = parse_problem(cfg.problem);
    if (problem != Problem::Rrec && problem != Problem::R2st)
      throw CliError{2, "export applies to the robust problems only"};
    if (cfg.instance_path.empty()) throw CliError{1, "export: --instance is required"};
    Instance inst = load_instance_file(cfg.instance_path);
    if (!inst.is_discrete())
      throw CliError{2, "export applies to the discrete budget model; the continuous problems "
                        "are solved directly"};
    MipModel m = problem == Problem::Rrec ? build_rrec_discrete_mip(inst)
                                          : build_r2st_discrete_mip(inst);
    const std::string text = write_lp_text(m);
    if (cfg.output_path.empty())
      out << text;
    else
      write_file(cfg.output_path, text);
    return 0;
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Problem problem = parse_problem(cfg.problem);
    if (cfg.count < 1) throw CliError{1, "verify: --count must be positive"};

    int mismatches = 0;
    for (int i = 0; i < cfg.count; ++i) {
      RunConfig one = cfg;
      one.seed = cfg.seed + static_cast<std::uint64_t>(i);
      Instance inst = generate_instance(gen_params(one));
      Prng aux(one.seed ^ 0x9e3779b97f4a7c15ULL);

      std::optional<SelectionSolution> x;
      std::optional<Scenario> scen;
      switch (problem) {
        case Problem::Irec:
          x = random_first_stage(aux, inst, false);
          scen = random_scenario(aux, inst);
          break;
        case Problem::I2st:
          x = random_first_stage(aux, inst, true);
          scen = random_scenario(aux, inst);
          break;
        case Problem::Arec:
          x = random_first_stage(aux, inst, false);
          break;
        case Problem::A2st:
          x = random_first_stage(aux, inst, true);
          break;
        default:
          break;
      }

      if (cfg.algorithm == "oracle" || cfg.algorithm == "approx")
        throw CliError{2, "verify compares an algorithm against the oracle; pick a non-oracle "
                          "algorithm"};
      SolveOutcome algo = run_algorithm(inst, problem, cfg.algorithm, x, scen);
      SolveOutcome ref = run_algorithm(inst, problem, "oracle", x, scen);

      ordered_json rec;
      rec["seed"] = one.seed;
      if (algo.value == ref.value) {
        rec["status"] = "EQUAL";
      } else {
        rec["status"] = "MISMATCH";
        rec["instance"] = nlohmann::json::parse(serialize_instance(inst));
        if (x) rec["first_stage"] = items_json(x->items);
        rec["algorithm_value"] = algo.value.to_string();
        rec["oracle_value"] = ref.value.to_string();
        ++mismatches;
      }
      out << rec.dump() << "\n";
    }
    ordered_json summary;
    summary["checked"] = cfg.count;
    summary["mismatches"] = mismatches;
    out << summary.dump() << "\n";
    return mismatches == 0 ? 0 : 1;
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"robust selection under budgeted uncertainty"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool wants_problem) {
    if (wants_problem)
      sub->add_option("--problem", cfg.problem, "irec|i2st|arec|a2st|rrec|r2st")->required();
    sub->add_option("--algorithm", cfg.algorithm,
                    "auto|intervals|levels|lp|enum|approx|oracle (default auto)");
    sub->add_option("--instance,-i", cfg.instance_path, "instance JSON file");
    sub->add_option("--out,-o", cfg.output_path, "output file (default stdout)");
    sub->add_option("--seed", cfg.seed, "generator seed");
    sub->add_option("--n", cfg.n, "item count for generated instances");
    sub->add_option("--p", [&cfg](const std::vector<std::string>& v) {
      cfg.p = std::stoi(v.front());
      return true;
    }, "selection size (default: random)");
    sub->add_option("--k", [&cfg](const std::vector<std::string>& v) {
      cfg.k = std::stoi(v.front());
      return true;
    }, "recovery parameter (default: random)");
    sub->add_option("--gamma", [&cfg](const std::vector<std::string>& v) {
      cfg.gamma = v.front();
      return true;
    }, "budget (default: ceil(n/4))");
    sub->add_option("--model", cfg.budget_model, "continuous|discrete");
    sub->add_option("--Cmax", cfg.first_stage_max, "max first-stage cost");
    sub->add_option("--cmax", cfg.nominal_max, "max nominal cost");
    sub->add_option("--dmax", cfg.deviation_max, "max deviation");
    sub->add_option("--count", cfg.count, "verification batch size");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a problem on an instance file");
  add_common(solve, true);
  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  add_common(gen, false);
  CLI::App* exp = app.add_subcommand("export", "write the discrete robust MIP in LP format");
  add_common(exp, true);
  CLI::App* verify = app.add_subcommand("verify", "compare an algorithm against its oracle");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (solve->parsed()) return cmd_solve(cfg, out, err);
  if (gen->parsed()) return cmd_gen(cfg, out, err);
  if (exp->parsed()) return cmd_export(cfg, out, err);
  if (verify->parsed()) return cmd_verify(cfg, out, err);
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace robsel
