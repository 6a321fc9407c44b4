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

#ifndef BB84SEC_ATTACK_HPP
#define BB84SEC_ATTACK_HPP

#include <string>
#include <vector>

#include "bb84sec/linalg.hpp"
#include "bb84sec/rng.hpp"

namespace bb84sec {

/// One collective attack on one qubit, given by the four non-normalized
/// probe states that multiply Bob's z-basis outcomes after the attack
/// unitary: sending b yields e_b0 (x) |0> + e_b1 (x) |1> on probe (x) qubit.
///
/// Unitarity constrains the vectors:
///   <e00|e00> + <e01|e01> = 1,   <e10|e10> + <e11|e11> = 1,
///   <e00|e10> + <e01|e11> = 0.
struct AttackSpec {
  Index probe_dim = 0;
  Vector e00, e01, e10, e11;
};

struct Violation {
  std::string invariant;
  double residual;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks shapes and the unitarity invariants; reports every violation with
/// its residual instead of throwing.
ValidationReport validate(const AttackSpec& a);

/// The same attack expressed against x-basis kets on Bob's side:
///   e00x = [(e00 + e11) + (e10 + e01)] / 2
///   e01x = [(e00 - e11) + (e10 - e01)] / 2
///   e10x = [(e00 - e11) - (e10 - e01)] / 2
///   e11x = [(e00 + e11) - (e10 + e01)] / 2
/// Applying it twice returns the original spec. Throws ContractError if the
/// input fails validate().
AttackSpec to_x_basis(const AttackSpec& a);

struct ErrorRates {
  double pe_z;
  double pe_x;
  double pe;  // (pe_z + pe_x) / 2
};

/// Bob's matched-basis error probabilities.
///
/// pe_z = (<e01|e01> + <e10|e10>) / 2 directly; pe_x is computed both from
/// the closed form (1 - Re{<e00|e11> + <e10|e01>}) / 2 and from the direct
/// formula on to_x_basis(a). The routes must agree within 1e-8 or
/// ConsistencyError is thrown; the closed-form value is returned.
ErrorRates error_rates(const AttackSpec& a);

enum class Basis { Z, X };

/// The two purifications of Eve's per-bit states collapse to a pair of real
/// unit vectors in an abstract two-dimensional frame:
///   psi0 = (cos alpha, sin alpha),  psi1 = (cos alpha, -sin alpha).
struct PurifiedPair {
  double alpha;  // in [0, pi/4]

  double overlap() const;          // cos(2 alpha)
  Eigen::Vector2d psi0() const;
  Eigen::Vector2d psi1() const;
};

/// Disturbance angle in the requested basis:
/// alpha = arccos(min(1, |<e00|e11> + <e10|e01>|)) / 2, with the probe
/// vectors of that basis. Guarantees sin(alpha_z) <= sqrt(pe_x) and
/// sin(alpha) <= sqrt(2 pe) up to 1e-10.
PurifiedPair disturbance_angle(const AttackSpec& a, Basis basis);

/// Valid-by-construction random attack: applies a Haar-ish random unitary
/// on the probe (x) qubit space to |E>|0> and |E>|1> and reads off the four
/// probe vectors.
AttackSpec random_attack(Index probe_dim, SplitMix64& rng);

}  // namespace bb84sec

#endif  // BB84SEC_ATTACK_HPP
