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

#include "bb84sec/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bb84sec {

namespace {

void check_config(const ProtocolConfig& cfg) {
  if (cfg.n_raw < 4)
    throw std::domain_error("protocol: n_raw must be >= 4");
  if (cfg.p_allowed < 0.0 || cfg.p_allowed > 1.0)
    throw std::domain_error("protocol: p_allowed must be in [0, 1]");
}

void check_probabilities(const std::vector<double>& ps) {
  for (double p : ps) {
    if (p < 0.0 || p > 1.0)
      throw std::domain_error("protocol: error probability outside [0, 1]");
  }
}

// Fisher-Yates with next_below, from the top index down.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j =
        static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i)));
    std::swap(v[i - 1], v[j]);
  }
}

// Core run. error_of(i, basis) gives the matched-basis flip probability of
// round i when both parties used `basis` (0 = z, 1 = x).
template <typename ErrorFn>
Transcript run_protocol_impl(const ProtocolConfig& cfg, ErrorFn error_of) {
  check_config(cfg);
  SplitMix64 rng(cfg.rng_seed);
  const auto n = static_cast<std::size_t>(cfg.n_raw);

  Transcript t;
  t.alice_bits.resize(n);
  t.alice_bases.resize(n);
  t.bob_bases.resize(n);
  t.bob_bits.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    t.alice_bits[i] = rng.next_bit();
    t.alice_bases[i] = rng.next_bit();
    t.bob_bases[i] = rng.next_bit();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.alice_bases[i] != t.bob_bases[i]) continue;  // discarded unread
    const double p = error_of(i, t.alice_bases[i]);
    const int flip = rng.bernoulli(p) ? 1 : 0;
    t.bob_bits[i] = t.alice_bits[i] ^ flip;
    t.sifted_indices.push_back(static_cast<std::int64_t>(i));
  }
  if (t.sifted_indices.empty())
    throw ProtocolAbort("protocol: sifting left no bits");

  std::vector<std::int64_t> working = t.sifted_indices;
  if (working.size() % 2 != 0) working.pop_back();
  if (working.empty())
    throw ProtocolAbort("protocol: sifting left no usable bits");
  t.n_prime = static_cast<std::int64_t>(working.size());

  shuffle(working, rng);
  const std::size_t n_test = working.size() / 2;
  t.test_indices.assign(working.begin(),
                        working.begin() + static_cast<std::ptrdiff_t>(n_test));
  t.key_indices.assign(working.begin() + static_cast<std::ptrdiff_t>(n_test),
                       working.end());
  std::sort(t.test_indices.begin(), t.test_indices.end());
  std::sort(t.key_indices.begin(), t.key_indices.end());

  std::int64_t disagreements = 0;
  for (std::int64_t i : t.test_indices) {
    const auto idx = static_cast<std::size_t>(i);
    if (t.bob_bits[idx] != t.alice_bits[idx]) ++disagreements;
  }
  t.p_test = static_cast<double>(disagreements) / static_cast<double>(n_test);
  t.accepted = t.p_test <= cfg.p_allowed;
  return t;
}

}  // namespace

Transcript run_protocol(const ProtocolConfig& cfg,
                        const std::vector<double>& per_bit_error) {
  if (per_bit_error.empty())
    throw std::domain_error("protocol: per_bit_error must not be empty");
  if (per_bit_error.size() != 1 &&
      per_bit_error.size() != static_cast<std::size_t>(cfg.n_raw)) {
    throw ShapeError("protocol: per_bit_error length must be 1 or n_raw");
  }
  check_probabilities(per_bit_error);
  return run_protocol_impl(cfg, [&](std::size_t i, int) {
    return per_bit_error.size() == 1 ? per_bit_error[0] : per_bit_error[i];
  });
}

Transcript run_protocol(const ProtocolConfig& cfg, const AttackSpec& attack) {
  const ErrorRates rates = error_rates(attack);
  return run_protocol_impl(cfg, [&](std::size_t, int basis) {
    return basis == 0 ? rates.pe_z : rates.pe_x;
  });
}

Transcript run_protocol(const ProtocolConfig& cfg,
                        const std::vector<AttackSpec>& attacks) {
  if (attacks.empty())
    throw std::domain_error("protocol: attack list must not be empty");
  if (attacks.size() != 1 &&
      attacks.size() != static_cast<std::size_t>(cfg.n_raw)) {
    throw ShapeError("protocol: attack list length must be 1 or n_raw");
  }
  std::vector<ErrorRates> rates;
  rates.reserve(attacks.size());
  for (const AttackSpec& a : attacks) rates.push_back(error_rates(a));
  return run_protocol_impl(cfg, [&](std::size_t i, int basis) {
    const ErrorRates& r = rates.size() == 1 ? rates[0] : rates[i];
    return basis == 0 ? r.pe_z : r.pe_x;
  });
}

HoeffdingMonteCarlo hoeffding_monte_carlo(
    const ProtocolConfig& cfg, const std::vector<double>& per_bit_error,
    double delta, std::int64_t trials) {
  if (trials < 1)
    throw std::domain_error("hoeffding_monte_carlo: trials must be >= 1");
  if (!(delta > 0.0))
    throw std::domain_error("hoeffding_monte_carlo: delta must be > 0");
  std::size_t n_prime = per_bit_error.size();
  if (n_prime % 2 != 0) --n_prime;  // throw one bit if needed
  if (n_prime < 2)
    throw std::domain_error(
        "hoeffding_monte_carlo: need at least two error entries");
  check_probabilities(per_bit_error);

  const std::size_t n_test = n_prime / 2;
  const double population_mean =
      std::accumulate(per_bit_error.begin(),
                      per_bit_error.begin() + static_cast<std::ptrdiff_t>(n_prime),
                      0.0) /
      static_cast<double>(n_prime);

  std::vector<std::size_t> order(n_prime);
  std::int64_t events = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = SplitMix64::substream(cfg.rng_seed,
                                           static_cast<std::uint64_t>(trial));
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(order, rng);
    std::vector<std::size_t> test(order.begin(),
                                  order.begin() + static_cast<std::ptrdiff_t>(n_test));
    std::sort(test.begin(), test.end());
    std::int64_t flips = 0;
    for (std::size_t i : test) {
      if (rng.bernoulli(per_bit_error[i])) ++flips;
    }
    const double p_test =
        static_cast<double>(flips) / static_cast<double>(n_test);
    if (population_mean > p_test + 2.0 * delta) ++events;
  }

  HoeffdingMonteCarlo out;
  out.empirical_rate =
      static_cast<double>(events) / static_cast<double>(trials);
  out.analytic_bound =
      2.0 * std::exp(-2.0 * static_cast<double>(n_test) * delta * delta);
  out.trials = trials;
  out.n_prime = static_cast<std::int64_t>(n_prime);
  out.n_test = static_cast<std::int64_t>(n_test);
  out.delta = delta;
  out.population_mean = population_mean;
  return out;
}

}  // namespace bb84sec
