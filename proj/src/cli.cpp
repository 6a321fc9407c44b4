// Copyright 2026 The bb84sec Authors
//
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

#include "bb84sec/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bb84sec/scenario.hpp"

namespace bb84sec {

namespace {

struct Output {
  std::optional<std::string> path;
  std::ostringstream buffer;

  int flush() {
    if (!path) {
      std::cout << buffer.str();
      return 0;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *path << "\n";
      return 2;
    }
    out << buffer.str();
    return 0;
  }
};

struct SweepSpec {
  std::string param;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
};

SweepSpec parse_sweep(const std::string& text) {
  // param=lo:hi:steps
  const auto eq = text.find('=');
  const auto c1 = text.find(':', eq + 1);
  const auto c2 = text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos ||
      c2 == std::string::npos) {
    throw ParseError("--sweep expects param=lo:hi:steps");
  }
  SweepSpec s;
  s.param = text.substr(0, eq);
  try {
    s.lo = std::stod(text.substr(eq + 1, c1 - eq - 1));
    s.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    s.steps = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw ParseError("--sweep expects numeric lo:hi:steps");
  }
  if (s.steps < 1) throw ParseError("--sweep needs steps >= 1");
  const std::vector<std::string> known = {"p_test", "delta", "alpha_frac",
                                          "n", "r"};
  if (std::find(known.begin(), known.end(), s.param) == known.end()) {
    throw ParseError("--sweep param must be one of p_test, delta, "
                     "alpha_frac, n, r");
  }
  return s;
}

// Bound parameters resolved against the scenario's code.
struct ResolvedBound {
  std::int64_t n;
  std::int64_t r;
  double alpha_frac;
  double p_test;
  double delta;
  BoundMode mode;
  std::optional<std::vector<double>> weights;
};

ResolvedBound resolve_bound_params(const Scenario& s) {
  if (!s.bounds) throw ParseError("scenario has no 'bounds' section");
  const BoundParams& bp = *s.bounds;
  ResolvedBound rb;
  rb.p_test = bp.p_test;
  rb.delta = bp.delta;
  rb.mode = bp.mode;

  std::optional<CosetWeightReport> cw;
  if (s.code && s.code->r() <= enumeration_cap()) cw = coset_weights(*s.code);

  if (bp.n)
    rb.n = *bp.n;
  else if (s.code)
    rb.n = s.code->n;
  else
    throw ParseError("bounds: n is needed (explicitly or via a code)");

  if (bp.r)
    rb.r = *bp.r;
  else if (s.code)
    rb.r = s.code->r();
  else
    throw ParseError("bounds: r is needed (explicitly or via a code)");

  if (bp.alpha_frac)
    rb.alpha_frac = *bp.alpha_frac;
  else if (cw)
    rb.alpha_frac = cw->alpha;
  else
    throw ParseError("bounds: alpha_frac is needed (explicitly or via a code)");

  if (bp.weights)
    rb.weights = bp.weights;
  else if (cw && rb.mode == BoundMode::PerCoset) {
    std::vector<double> w;
    w.reserve(cw->entries.size());
    for (const CosetWeight& e : cw->entries)
      w.push_back(static_cast<double>(e.weight));
    rb.weights = std::move(w);
  }
  return rb;
}

BoundReport evaluate_bounds(const Scenario& s, const ResolvedBound& rb) {
  BoundReport report = total_info_bound(
      rb.n, rb.r, rb.alpha_frac, rb.p_test, rb.delta, rb.mode,
      rb.weights ? &*rb.weights : nullptr);
  if (s.code) {
    std::optional<PerBitNoise> noise = s.noise;
    if (!noise && !s.attacks.empty())
      noise = noise_from_attacks(s.attacks, s.code->n);
    if (noise) {
      const TraceNormBound tnb = trace_norm_bound(*s.code, *noise);
      report.tr_delta_bound = tnb.bound;
      report.sd_bound = std::min(1.0, 0.5 * tnb.bound);
      report.sd_bound_relaxed = std::min(1.0, tnb.bound);
      report.ps_worst_case = noise->ps_saturated;
    }
  }
  return report;
}

// Per-bit error parameters for simulation/Monte Carlo, in priority order:
// explicit noise, then attack-derived.
std::vector<double> population_for_mc(const Scenario& s) {
  if (s.noise) return s.noise->ps;
  if (!s.attacks.empty()) {
    if (s.attacks.size() > 1) {
      std::vector<double> ps;
      ps.reserve(s.attacks.size());
      for (const AttackSpec& a : s.attacks) ps.push_back(error_rates(a).pe);
      return ps;
    }
    if (!s.protocol)
      throw ParseError("simulate --trials with a single attack needs a "
                       "'protocol' section to size the population");
    return std::vector<double>(static_cast<std::size_t>(s.protocol->n_raw),
                               error_rates(s.attacks[0]).pe);
  }
  throw ParseError("scenario has neither 'noise' nor an attack to derive "
                   "error rates from");
}

int cmd_validate(const std::string& config, Output& out) {
  const Scenario s = load_scenario(config);
  Json report;
  bool ok = true;
  Json sections = Json::array();

  for (std::size_t i = 0; i < s.attacks.size(); ++i) {
    const ValidationReport vr = validate(s.attacks[i]);
    Json entry = to_json(vr);
    entry["section"] = s.attacks.size() == 1
                           ? std::string("attack")
                           : "attacks[" + std::to_string(i) + "]";
    ok = ok && vr.ok();
    sections.push_back(entry);
  }
  // code and noise were validated while parsing; report them as passed.
  if (s.code) {
    sections.push_back({{"section", "code"}, {"ok", true},
                        {"violations", Json::array()}});
  }
  if (s.noise) {
    sections.push_back({{"section", "noise"}, {"ok", true},
                        {"violations", Json::array()}});
  }
  for (const std::string& msg : consistency_violations(s)) {
    sections.push_back({{"section", "scenario"}, {"ok", false},
                        {"message", msg}});
    ok = false;
  }

  report["ok"] = ok;
  report["sections"] = sections;
  out.buffer << report.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_bounds(const std::string& config,
               const std::optional<std::string>& sweep_text,
               const std::string& mode_override, Output& out) {
  const Scenario s = load_scenario(config);
  ResolvedBound base = resolve_bound_params(s);
  if (!mode_override.empty()) {
    if (mode_override == "uniform")
      base.mode = BoundMode::Uniform;
    else if (mode_override == "per_coset")
      base.mode = BoundMode::PerCoset;
    else
      throw ParseError("--mode must be 'uniform' or 'per_coset'");
    if (base.mode == BoundMode::PerCoset && !base.weights && s.code &&
        s.code->r() <= enumeration_cap()) {
      const CosetWeightReport cw = coset_weights(*s.code);
      std::vector<double> w;
      w.reserve(cw.entries.size());
      for (const CosetWeight& e : cw.entries)
        w.push_back(static_cast<double>(e.weight));
      base.weights = std::move(w);
    }
  }

  if (!sweep_text) {
    out.buffer << to_json(evaluate_bounds(s, base)).dump(2) << "\n";
    return 0;
  }

  const SweepSpec sweep = parse_sweep(*sweep_text);
  for (int k = 0; k < sweep.steps; ++k) {
    const double value =
        sweep.steps == 1
            ? sweep.lo
            : sweep.lo + (sweep.hi - sweep.lo) * k / (sweep.steps - 1);
    ResolvedBound rb = base;
    if (sweep.param == "p_test") rb.p_test = value;
    if (sweep.param == "delta") rb.delta = value;
    if (sweep.param == "alpha_frac") rb.alpha_frac = value;
    if (sweep.param == "n") rb.n = static_cast<std::int64_t>(std::llround(value));
    if (sweep.param == "r") rb.r = static_cast<std::int64_t>(std::llround(value));

    Json record;
    record["grid_index"] = k;
    record["param"] = sweep.param;
    record["value"] = value;
    try {
      record["report"] = to_json(evaluate_bounds(s, rb));
    } catch (const std::exception& e) {
      record["error"] = e.what();
    }
    out.buffer << record.dump() << "\n";  // one record per line
  }
  return 0;
}

int cmd_brute_check(const std::string& config, Output& out) {
  const Scenario s = load_scenario(config);
  if (!s.code) throw ParseError("brute-check needs a 'code' section");
  std::optional<PerBitNoise> noise = s.noise;
  if (!noise && !s.attacks.empty())
    noise = noise_from_attacks(s.attacks, s.code->n);
  if (!noise)
    throw ParseError("brute-check needs 'noise' or an attack to derive it");

  const BruteForceReport report = brute_force_check(*s.code, *noise);
  out.buffer << to_json(report).dump(2) << "\n";
  return report.ok ? 0 : 1;
}

int cmd_simulate(const std::string& config, std::optional<std::uint64_t> seed,
                 std::int64_t trials, Output& out) {
  const Scenario s = load_scenario(config);
  if (!s.protocol) throw ParseError("simulate needs a 'protocol' section");
  ProtocolConfig cfg = *s.protocol;
  if (seed) cfg.rng_seed = *seed;

  if (trials > 0) {
    if (!s.bounds)
      throw ParseError("simulate --trials needs bounds.delta in the config");
    const HoeffdingMonteCarlo mc =
        hoeffding_monte_carlo(cfg, population_for_mc(s), s.bounds->delta,
                              trials);
    out.buffer << to_json(mc).dump(2) << "\n";
    return 0;
  }

  Transcript t;
  if (!s.attacks.empty()) {
    t = s.attacks.size() == 1 ? run_protocol(cfg, s.attacks[0])
                              : run_protocol(cfg, s.attacks);
  } else if (s.noise) {
    std::vector<double> per_bit = s.noise->ps;
    if (per_bit.size() != static_cast<std::size_t>(cfg.n_raw)) {
      const bool uniform =
          std::all_of(per_bit.begin(), per_bit.end(),
                      [&](double p) { return p == per_bit[0]; });
      if (!uniform)
        throw ParseError("simulate: noise.ps length must equal n_raw unless "
                         "uniform");
      per_bit = {per_bit[0]};
    }
    t = run_protocol(cfg, per_bit);
  } else {
    throw ParseError("simulate needs an attack or noise section");
  }
  out.buffer << to_json(t).dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"BB84 collective-attack security workbench"};
  app.require_subcommand(1);

  std::string config;
  std::optional<std::string> out_path;
  std::optional<std::string> sweep_text;
  std::optional<std::uint64_t> seed;
  std::int64_t trials = 0;
  std::string mode_override;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config, "scenario config (JSON)")->required();
    sub->add_option("--out", out_path, "write the report to this file");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check every scenario invariant");
  add_common(validate_cmd);

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "evaluate the analytic information bounds");
  add_common(bounds_cmd);
  bounds_cmd->add_option("--sweep", sweep_text,
                         "grid over one parameter: param=lo:hi:steps");
  bounds_cmd->add_option("--mode", mode_override,
                         "override bound mode: uniform|per_coset");

  CLI::App* brute_cmd = app.add_subcommand(
      "brute-check", "compare closed forms against brute-force enumeration");
  add_common(brute_cmd);

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "run the sifting-and-testing protocol");
  add_common(simulate_cmd);
  simulate_cmd->add_option("--seed", seed, "override protocol.rng_seed");
  simulate_cmd->add_option("--trials", trials,
                           "Monte Carlo trials for the Hoeffding event");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Output out;
  out.path = out_path;
  try {
    int status = 2;
    if (validate_cmd->parsed()) {
      status = cmd_validate(config, out);
    } else if (bounds_cmd->parsed()) {
      status = cmd_bounds(config, sweep_text, mode_override, out);
    } else if (brute_cmd->parsed()) {
      status = cmd_brute_check(config, out);
    } else if (simulate_cmd->parsed()) {
      status = cmd_simulate(config, seed, trials, out);
    }
    const int flush_status = out.flush();
    return flush_status != 0 ? flush_status : status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bb84sec
