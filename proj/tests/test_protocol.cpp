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

#include <doctest.h>

#include <cmath>
#include <set>

#include "bb84sec/protocol.hpp"
#include "bb84sec/scenario.hpp"
#include "testutil.hpp"

using namespace bb84sec;

namespace {

AttackSpec identity_attack() {
  AttackSpec a;
  a.probe_dim = 1;
  a.e00 = Vector::Constant(1, 1.0);
  a.e01 = Vector::Zero(1);
  a.e10 = Vector::Zero(1);
  a.e11 = Vector::Constant(1, 1.0);
  return a;
}

AttackSpec cnot_attack() {
  AttackSpec a;
  a.probe_dim = 2;
  a.e00 = Vector::Zero(2);
  a.e00(0) = 1.0;
  a.e01 = Vector::Zero(2);
  a.e10 = Vector::Zero(2);
  a.e11 = Vector::Zero(2);
  a.e11(1) = 1.0;
  return a;
}

void check_transcript_invariants(const Transcript& t,
                                 const ProtocolConfig& cfg) {
  // Sifted = matched bases.
  std::set<std::int64_t> sifted(t.sifted_indices.begin(),
                                t.sifted_indices.end());
  for (std::int64_t i = 0;
       i < static_cast<std::int64_t>(t.alice_bases.size()); ++i) {
    const bool matched =
        t.alice_bases[static_cast<std::size_t>(i)] ==
        t.bob_bases[static_cast<std::size_t>(i)];
    CHECK(sifted.count(i) == (matched ? 1u : 0u));
  }
  // Test and key partition the even-sized working set.
  std::set<std::int64_t> test(t.test_indices.begin(), t.test_indices.end());
  std::set<std::int64_t> key(t.key_indices.begin(), t.key_indices.end());
  CHECK(t.n_prime % 2 == 0);
  CHECK(static_cast<std::int64_t>(test.size() + key.size()) == t.n_prime);
  CHECK(test.size() == key.size());
  for (std::int64_t i : test) {
    CHECK(sifted.count(i) == 1);
    CHECK(key.count(i) == 0);
  }
  // p_test is the disagreement fraction on the test set.
  std::int64_t disagreements = 0;
  for (std::int64_t i : test) {
    if (t.alice_bits[static_cast<std::size_t>(i)] !=
        t.bob_bits[static_cast<std::size_t>(i)])
      ++disagreements;
  }
  CHECK(t.p_test ==
        doctest::Approx(static_cast<double>(disagreements) /
                        static_cast<double>(test.size())));
  CHECK(t.accepted == (t.p_test <= cfg.p_allowed));
}

}  // namespace

TEST_CASE("run_protocol: identity attack never errs") {
  ProtocolConfig cfg{256, 0.0, 7};
  const Transcript t = run_protocol(cfg, identity_attack());
  CHECK(t.p_test == 0.0);
  CHECK(t.accepted);
  check_transcript_invariants(t, cfg);
  for (std::int64_t i : t.sifted_indices) {
    CHECK(t.bob_bits[static_cast<std::size_t>(i)] ==
          t.alice_bits[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("run_protocol: certain errors are always rejected") {
  ProtocolConfig cfg{128, 0.99, 3};
  const Transcript t = run_protocol(cfg, std::vector<double>{1.0});
  CHECK(t.p_test == 1.0);
  CHECK_FALSE(t.accepted);
  check_transcript_invariants(t, cfg);
}

TEST_CASE("run_protocol: CNOT attack splits errors by basis") {
  ProtocolConfig cfg{100000, 0.5, 11};
  const Transcript t = run_protocol(cfg, cnot_attack());
  check_transcript_invariants(t, cfg);

  std::int64_t z_rounds = 0, z_errors = 0, x_rounds = 0, x_errors = 0;
  for (std::int64_t i : t.sifted_indices) {
    const auto k = static_cast<std::size_t>(i);
    const bool err = t.bob_bits[k] != t.alice_bits[k];
    if (t.alice_bases[k] == 0) {
      ++z_rounds;
      z_errors += err;
    } else {
      ++x_rounds;
      x_errors += err;
    }
  }
  CHECK(z_errors == 0);  // pe_z = 0 exactly
  const double x_rate =
      static_cast<double>(x_errors) / static_cast<double>(x_rounds);
  const double sigma = std::sqrt(0.25 / static_cast<double>(x_rounds));
  CHECK(std::abs(x_rate - 0.5) <= 3.0 * sigma);

  // Overall matched-basis error near pe = 1/4.
  const double total_rate = static_cast<double>(z_errors + x_errors) /
                            static_cast<double>(z_rounds + x_rounds);
  const double sigma_total =
      std::sqrt(0.25 * 0.75 / static_cast<double>(z_rounds + x_rounds));
  CHECK(std::abs(total_rate - 0.25) <= 3.0 * sigma_total);
}

TEST_CASE("run_protocol: identical seeds give byte-identical transcripts") {
  ProtocolConfig cfg{512, 0.1, 99};
  const Transcript a = run_protocol(cfg, std::vector<double>{0.05});
  const Transcript b = run_protocol(cfg, std::vector<double>{0.05});
  CHECK(to_json(a).dump() == to_json(b).dump());

  cfg.rng_seed = 100;
  const Transcript c = run_protocol(cfg, std::vector<double>{0.05});
  CHECK(to_json(a).dump() != to_json(c).dump());
}

TEST_CASE("run_protocol: sifting keeps about half the raw bits") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    ProtocolConfig cfg{10000, 0.5, seed};
    const Transcript t = run_protocol(cfg, std::vector<double>{0.01});
    const double kept = static_cast<double>(t.sifted_indices.size()) /
                        static_cast<double>(cfg.n_raw);
    CHECK(std::abs(kept - 0.5) <= 5.0 / std::sqrt(10000.0));
  }
}

TEST_CASE("run_protocol: per-bit heterogeneous attacks and lists") {
  ProtocolConfig cfg{64, 0.5, 5};
  std::vector<AttackSpec> attacks(64, identity_attack());
  const Transcript t = run_protocol(cfg, attacks);
  CHECK(t.p_test == 0.0);

  CHECK_THROWS_AS(
      (void)run_protocol(cfg, std::vector<AttackSpec>(3, identity_attack())),
      ShapeError);
  CHECK_THROWS_AS((void)run_protocol(cfg, std::vector<double>{0.1, 0.2}),
                  ShapeError);
  CHECK_THROWS_AS((void)run_protocol(cfg, std::vector<double>{1.5}),
                  std::domain_error);
  CHECK_THROWS_AS((void)run_protocol(ProtocolConfig{2, 0.5, 1},
                                     std::vector<double>{0.1}),
                  std::domain_error);
}

TEST_CASE("run_protocol: aborts when sifting leaves nothing") {
  // Seed 1 mismatches all four bases at n_raw = 4.
  ProtocolConfig cfg{4, 0.5, 1};
  CHECK_THROWS_AS((void)run_protocol(cfg, std::vector<double>{0.1}),
                  ProtocolAbort);
}

TEST_CASE("hoeffding_monte_carlo: zero noise never triggers the event") {
  ProtocolConfig cfg{0, 0.0, 17};
  const HoeffdingMonteCarlo mc = hoeffding_monte_carlo(
      cfg, std::vector<double>(100, 0.0), 0.01, 500);
  CHECK(mc.empirical_rate == 0.0);
  CHECK(mc.n_prime == 100);
  CHECK(mc.n_test == 50);
}

TEST_CASE("hoeffding_monte_carlo: large delta makes the event impossible") {
  ProtocolConfig cfg{0, 0.0, 18};
  const HoeffdingMonteCarlo mc = hoeffding_monte_carlo(
      cfg, std::vector<double>(200, 0.3), 0.5, 500);
  CHECK(mc.empirical_rate == 0.0);
  CHECK(mc.analytic_bound ==
        doctest::Approx(2.0 * std::exp(-2.0 * 100.0 * 0.25)).epsilon(1e-12));
}

TEST_CASE("hoeffding_monte_carlo: empirical rate within the analytic bound") {
  ProtocolConfig cfg{0, 0.0, 19};
  const std::int64_t trials = 10000;
  const HoeffdingMonteCarlo mc = hoeffding_monte_carlo(
      cfg, std::vector<double>(200, 0.05), 0.05, trials);
  const double bound = std::min(1.0, mc.analytic_bound);
  const double sigma =
      std::sqrt(std::max(bound * (1.0 - bound), 1e-12) /
                static_cast<double>(trials));
  CHECK(mc.empirical_rate <= bound + 3.0 * sigma);

  // Odd population drops the last entry.
  const HoeffdingMonteCarlo odd = hoeffding_monte_carlo(
      cfg, std::vector<double>(201, 0.05), 0.05, 10);
  CHECK(odd.n_prime == 200);
}

TEST_CASE("hoeffding_monte_carlo: domain errors") {
  ProtocolConfig cfg{0, 0.0, 20};
  CHECK_THROWS_AS((void)hoeffding_monte_carlo(cfg, {0.1, 0.1}, 0.0, 10),
                  std::domain_error);
  CHECK_THROWS_AS((void)hoeffding_monte_carlo(cfg, {0.1, 0.1}, 0.1, 0),
                  std::domain_error);
  CHECK_THROWS_AS((void)hoeffding_monte_carlo(cfg, {0.1}, 0.1, 10),
                  std::domain_error);
}
