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

#ifndef BB84SEC_SCENARIO_HPP
#define BB84SEC_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bb84sec/attack.hpp"
#include "bb84sec/gf2.hpp"
#include "bb84sec/protocol.hpp"
#include "bb84sec/security.hpp"

namespace bb84sec {

using Json = nlohmann::json;

/// A config file failed to parse or referenced inconsistent fields. The
/// message carries the offending file/field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters of the closed-form information bound. Fields left unset fall
/// back to the scenario's code (n, r, weights, alpha via coset weights).
struct BoundParams {
  double delta = 0.0;
  double p_test = 0.0;
  BoundMode mode = BoundMode::Uniform;
  std::optional<double> alpha_frac;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> r;
  std::optional<std::vector<double>> weights;
};

/// One workbench input: any subset of attack(s), per-bit noise, parity code,
/// protocol parameters and bound parameters, with lengths consistent where
/// they overlap.
struct Scenario {
  std::vector<AttackSpec> attacks;  // empty, one (uniform), or one per bit
  std::optional<PerBitNoise> noise;
  std::optional<ParityCode> code;
  std::optional<ProtocolConfig> protocol;
  std::optional<BoundParams> bounds;
};

Scenario parse_scenario(const Json& j);
Scenario load_scenario(const std::string& path);

/// Cross-section length checks (attacks list vs noise vs code).
/// Returns a human-readable message per violation.
std::vector<std::string> consistency_violations(const Scenario& s);

/// Worst-case-consistent noise derived from per-bit attacks:
/// alpha_i = max(alpha_z, alpha_x), p_i = pe of attack i. With a single
/// attack the same entry is repeated n times.
PerBitNoise noise_from_attacks(const std::vector<AttackSpec>& attacks, int n);

// JSON encodings. Attack probe vectors are nested lists of [re, im] pairs;
// bit strings are "0101" text.
Json attack_to_json(const AttackSpec& a);
AttackSpec attack_from_json(const Json& j);
Json code_to_json(const ParityCode& c);
ParityCode code_from_json(const Json& j);
Json to_json(const Transcript& t);
Json to_json(const BoundReport& r);
Json to_json(const BruteForceReport& r);
Json to_json(const HoeffdingMonteCarlo& r);
Json to_json(const ValidationReport& r);

}  // namespace bb84sec

#endif  // BB84SEC_SCENARIO_HPP
