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

#ifndef BB84SEC_PROTOCOL_HPP
#define BB84SEC_PROTOCOL_HPP

#include <cstdint>
#include <vector>

#include "bb84sec/attack.hpp"

namespace bb84sec {

/// Sifting-and-testing stage parameters. Half of the sifted bits (after
/// discarding one if their count is odd) are spent on the error estimate.
struct ProtocolConfig {
  std::int64_t n_raw = 0;  // qubits sent
  double p_allowed = 0.0;  // accept threshold for the test estimate
  std::uint64_t rng_seed = 0;
};

/// Everything both parties see during one protocol run. sifted_indices are
/// all matched-basis rounds; test/key partition them after the evenness
/// discard, so one sifted index may belong to neither.
struct Transcript {
  std::vector<int> alice_bits;
  std::vector<int> alice_bases;
  std::vector<int> bob_bases;
  std::vector<int> bob_bits;  // zero at rounds that were never read
  std::vector<std::int64_t> sifted_indices;
  std::vector<std::int64_t> test_indices;
  std::vector<std::int64_t> key_indices;
  double p_test = 0.0;
  bool accepted = false;
  std::int64_t n_prime = 0;  // even sifted count actually used
};

/// Runs sifting and testing with per-round error probabilities.
///
/// Draw order is fixed for reproducibility: per round i one SplitMix64 bit
/// each for alice_bits[i], alice_bases[i], bob_bases[i] (three draws per
/// round); then one bernoulli draw per matched round in index order for
/// Bob's flip; then one Fisher-Yates shuffle of the working sifted set
/// (next_below, descending index) that selects the test half. Mismatched
/// rounds consume no flip draw.
///
/// per_bit_error must have length n_raw or 1 (broadcast).
Transcript run_protocol(const ProtocolConfig& cfg,
                        const std::vector<double>& per_bit_error);

/// Same, with the matched-basis error probability of every round derived
/// from the attack: pe_z when the agreed basis is z, pe_x when x.
Transcript run_protocol(const ProtocolConfig& cfg, const AttackSpec& attack);

/// Heterogeneous per-position attacks (length n_raw or 1).
Transcript run_protocol(const ProtocolConfig& cfg,
                        const std::vector<AttackSpec>& attacks);

struct HoeffdingMonteCarlo {
  double empirical_rate = 0.0;
  double analytic_bound = 0.0;  // 2 exp(-2 n_test delta^2)
  std::int64_t trials = 0;
  std::int64_t n_prime = 0;
  std::int64_t n_test = 0;
  double delta = 0.0;
  double population_mean = 0.0;  // mean error parameter of the n' bits
};

/// Estimates how often the test underestimates the channel: the event of
/// one trial is
///
///   mean_i p_i  >  p_test + 2 delta
///
/// where the mean runs over all n' bits' error parameters and p_test is the
/// realized error fraction on the n'/2 randomly chosen test bits of that
/// trial. The population is per_bit_error itself: its length, made even by
/// dropping the last entry if necessary, plays n' (cfg.n_raw is not used
/// here; cfg contributes the seed). Trial t uses the derived stream
/// SplitMix64::substream(seed, t): first the Fisher-Yates test selection,
/// then one bernoulli per test bit in ascending index order.
HoeffdingMonteCarlo hoeffding_monte_carlo(
    const ProtocolConfig& cfg, const std::vector<double>& per_bit_error,
    double delta, std::int64_t trials);

}  // namespace bb84sec

#endif  // BB84SEC_PROTOCOL_HPP
