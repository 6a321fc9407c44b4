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

#include "bb84sec/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace bb84sec {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

Vector complex_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of [re, im] pairs");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& entry = j[k];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      fail(where, "entry " + std::to_string(k) + " is not a [re, im] pair");
    }
    v(static_cast<Index>(k)) =
        Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  return v;
}

Json complex_vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) {
    out.push_back({v(k).real(), v(k).imag()});
  }
  return out;
}

BitString bitstring_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a 0/1 text string");
  try {
    return BitString::from_string(j.get<std::string>());
  } catch (const ContractError& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json attack_to_json(const AttackSpec& a) {
  Json j;
  j["probe_dim"] = a.probe_dim;
  j["e00"] = complex_vector_to_json(a.e00);
  j["e01"] = complex_vector_to_json(a.e01);
  j["e10"] = complex_vector_to_json(a.e10);
  j["e11"] = complex_vector_to_json(a.e11);
  return j;
}

AttackSpec attack_from_json(const Json& j) {
  const std::string where = "attack";
  AttackSpec a;
  const Json& pd = field(j, "probe_dim", where);
  if (!pd.is_number_integer() || pd.get<std::int64_t>() < 1)
    fail(where, "probe_dim must be a positive integer");
  a.probe_dim = pd.get<Index>();
  a.e00 = complex_vector_from_json(field(j, "e00", where), where + ".e00");
  a.e01 = complex_vector_from_json(field(j, "e01", where), where + ".e01");
  a.e10 = complex_vector_from_json(field(j, "e10", where), where + ".e10");
  a.e11 = complex_vector_from_json(field(j, "e11", where), where + ".e11");
  for (const auto* v : {&a.e00, &a.e01, &a.e10, &a.e11}) {
    if (v->size() != a.probe_dim)
      fail(where, "probe vectors must have length probe_dim");
  }
  return a;
}

Json code_to_json(const ParityCode& c) {
  Json j;
  j["n"] = c.n;
  j["v"] = c.v.to_string();
  Json strings = Json::array();
  for (const BitString& s : c.ecc_strings) strings.push_back(s.to_string());
  j["ecc_strings"] = strings;
  j["ecc_bits"] = c.ecc_bits;
  return j;
}

ParityCode code_from_json(const Json& j) {
  const std::string where = "code";
  ParityCode c;
  const Json& n = field(j, "n", where);
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1)
    fail(where, "n must be a positive integer");
  c.n = n.get<int>();
  c.v = bitstring_from_json(field(j, "v", where), where + ".v");
  if (j.contains("ecc_strings")) {
    const Json& strings = j.at("ecc_strings");
    if (!strings.is_array()) fail(where, "ecc_strings must be a list");
    for (std::size_t i = 0; i < strings.size(); ++i) {
      c.ecc_strings.push_back(bitstring_from_json(
          strings[i], where + ".ecc_strings[" + std::to_string(i) + "]"));
    }
    const Json& bits = field(j, "ecc_bits", where);
    if (!bits.is_array() || bits.size() != strings.size())
      fail(where, "ecc_bits must list one bit per ecc string");
    for (std::size_t i = 0; i < bits.size(); ++i) {
      const int b = bits[i].get<int>();
      if (b != 0 && b != 1)
        fail(where, "ecc_bits[" + std::to_string(i) + "] must be 0/1");
      c.ecc_bits.push_back(b);
    }
  }
  try {
    validate_code(c);
  } catch (const ContractError& e) {
    throw ParseError(e.what());  // message already carries the section
  }
  return c;
}

Scenario parse_scenario(const Json& j) {
  Scenario s;
  if (j.contains("attack") && j.contains("attacks"))
    fail("scenario", "give either 'attack' or 'attacks', not both");
  if (j.contains("attack")) {
    s.attacks.push_back(attack_from_json(j.at("attack")));
  } else if (j.contains("attacks")) {
    const Json& list = j.at("attacks");
    if (!list.is_array() || list.empty())
      fail("attacks", "expected a non-empty list");
    for (const Json& a : list) s.attacks.push_back(attack_from_json(a));
  }

  if (j.contains("noise")) {
    const Json& nj = j.at("noise");
    PerBitNoise noise;
    if (nj.contains("alphas")) {
      noise.alphas = nj.at("alphas").get<std::vector<double>>();
    }
    if (nj.contains("ps")) {
      noise.ps = nj.at("ps").get<std::vector<double>>();
    }
    if (noise.alphas.empty() && noise.ps.empty())
      fail("noise", "needs 'alphas' and/or 'ps'");
    if (noise.alphas.empty()) {
      // Saturate the angle from p: sin(alpha) = min(1, sqrt(2 p)), capped
      // at pi/4.
      for (double p : noise.ps) {
        if (p < 0.0 || p > 1.0) fail("noise", "p outside [0, 1]");
        noise.alphas.push_back(
            std::min(M_PI / 4.0, std::asin(std::min(1.0, std::sqrt(2.0 * p)))));
      }
    } else if (noise.ps.empty()) {
      PerBitNoise sat = PerBitNoise::from_alphas(noise.alphas);
      noise = std::move(sat);
    }
    try {
      validate_noise(noise);
    } catch (const ContractError& e) {
      fail("noise", e.what());
    }
    s.noise = std::move(noise);
  }

  if (j.contains("code")) s.code = code_from_json(j.at("code"));

  if (j.contains("protocol")) {
    const Json& pj = j.at("protocol");
    ProtocolConfig cfg;
    cfg.n_raw = field(pj, "n_raw", "protocol").get<std::int64_t>();
    cfg.p_allowed = field(pj, "p_allowed", "protocol").get<double>();
    cfg.rng_seed = pj.contains("rng_seed")
                       ? pj.at("rng_seed").get<std::uint64_t>()
                       : 0;
    if (cfg.n_raw < 4) fail("protocol", "n_raw must be >= 4");
    if (cfg.p_allowed < 0.0 || cfg.p_allowed > 1.0)
      fail("protocol", "p_allowed must be in [0, 1]");
    s.protocol = cfg;
  }

  if (j.contains("bounds")) {
    const Json& bj = j.at("bounds");
    BoundParams bp;
    bp.delta = field(bj, "delta", "bounds").get<double>();
    bp.p_test = field(bj, "p_test", "bounds").get<double>();
    if (bj.contains("mode")) {
      const std::string mode = bj.at("mode").get<std::string>();
      if (mode == "uniform")
        bp.mode = BoundMode::Uniform;
      else if (mode == "per_coset")
        bp.mode = BoundMode::PerCoset;
      else
        fail("bounds", "mode must be 'uniform' or 'per_coset'");
    }
    if (bj.contains("alpha_frac")) bp.alpha_frac = bj.at("alpha_frac").get<double>();
    if (bj.contains("n")) bp.n = bj.at("n").get<std::int64_t>();
    if (bj.contains("r")) bp.r = bj.at("r").get<std::int64_t>();
    if (bj.contains("weights"))
      bp.weights = bj.at("weights").get<std::vector<double>>();
    s.bounds = std::move(bp);
  }

  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return parse_scenario(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<std::string> consistency_violations(const Scenario& s) {
  std::vector<std::string> out;
  std::optional<int> n;
  if (s.code) n = s.code->n;
  if (s.noise) {
    if (n && *n != s.noise->n()) {
      out.push_back("noise has " + std::to_string(s.noise->n()) +
                    " bits but code has n = " + std::to_string(*n));
    }
    if (!n) n = s.noise->n();
  }
  if (s.attacks.size() > 1) {
    if (n && static_cast<int>(s.attacks.size()) != *n) {
      out.push_back("attacks list has " + std::to_string(s.attacks.size()) +
                    " entries but n = " + std::to_string(*n));
    }
  }
  return out;
}

PerBitNoise noise_from_attacks(const std::vector<AttackSpec>& attacks, int n) {
  if (attacks.empty())
    throw ContractError("noise_from_attacks: no attacks given");
  if (attacks.size() != 1 && static_cast<int>(attacks.size()) != n)
    throw ShapeError("noise_from_attacks: attack list length must be 1 or n");
  PerBitNoise noise;
  noise.alphas.reserve(static_cast<std::size_t>(n));
  noise.ps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const AttackSpec& a =
        attacks.size() == 1 ? attacks[0] : attacks[static_cast<std::size_t>(i)];
    const double az = disturbance_angle(a, Basis::Z).alpha;
    const double ax = disturbance_angle(a, Basis::X).alpha;
    noise.alphas.push_back(std::max(az, ax));
    noise.ps.push_back(error_rates(a).pe);
  }
  validate_noise(noise);
  return noise;
}

Json to_json(const Transcript& t) {
  Json j;
  j["alice_bits"] = t.alice_bits;
  j["alice_bases"] = t.alice_bases;
  j["bob_bases"] = t.bob_bases;
  j["bob_bits"] = t.bob_bits;
  j["sifted_indices"] = t.sifted_indices;
  j["test_indices"] = t.test_indices;
  j["key_indices"] = t.key_indices;
  j["p_test"] = t.p_test;
  j["accepted"] = t.accepted;
  j["n_prime"] = t.n_prime;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["tr_delta_bound"] = r.tr_delta_bound;
  j["sd_bound"] = r.sd_bound;
  j["sd_bound_relaxed"] = r.sd_bound_relaxed;
  j["per_coset_terms"] = r.per_coset_terms;
  j["hoeffding_tail"] = r.hoeffding_tail;
  j["total_info_bound"] = r.total_info_bound;
  j["log2_total_info_bound"] = r.log2_total_info_bound;
  j["n"] = r.n;
  j["r"] = r.r;
  j["alpha"] = r.alpha;
  j["delta"] = r.delta;
  j["p_test"] = r.p_test;
  j["mode"] = r.mode;
  j["ps_worst_case"] = r.ps_worst_case;
  return j;
}

Json to_json(const BruteForceReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["max_delta_entry_diff"] = r.max_delta_entry_diff;
  j["trace_norm_brute"] = r.trace_norm_brute;
  j["trace_norm_bound"] = r.trace_norm_bound_value;
  j["tightness_required"] = r.tightness_required;
  j["tightness_gap"] = r.tightness_gap;
  j["max_sd_violation"] = r.max_sd_violation;
  j["povm_trials"] = r.povm_trials;
  j["failures"] = r.failures;
  return j;
}

Json to_json(const HoeffdingMonteCarlo& r) {
  Json j;
  j["empirical_rate"] = r.empirical_rate;
  j["analytic_bound"] = r.analytic_bound;
  j["trials"] = r.trials;
  j["n_prime"] = r.n_prime;
  j["n_test"] = r.n_test;
  j["delta"] = r.delta;
  j["population_mean"] = r.population_mean;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"invariant", v.invariant}, {"residual", v.residual}});
  }
  j["violations"] = violations;
  return j;
}

}  // namespace bb84sec
