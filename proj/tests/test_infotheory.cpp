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

#include "bb84sec/infotheory.hpp"
#include "bb84sec/random.hpp"
#include "testutil.hpp"

using namespace bb84sec;

namespace {

Matrix ket0_proj() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return m;
}

Matrix ket1_proj() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}

Matrix plus_proj() {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return m;
}

Povm computational_povm() { return Povm{{ket0_proj(), ket1_proj()}}; }

}  // namespace

TEST_CASE("binary_entropy_info: endpoint and midpoint values") {
  CHECK(binary_entropy_info(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(binary_entropy_info(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy_info(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // 1 + (1/4) log2(1/4) + (3/4) log2(3/4), evaluated independently.
  CHECK(binary_entropy_info(0.25) ==
        doctest::Approx(0.18872187554086717).epsilon(1e-14));
  CHECK_THROWS_AS((void)binary_entropy_info(-0.01), std::domain_error);
  CHECK_THROWS_AS((void)binary_entropy_info(1.01), std::domain_error);
}

TEST_CASE("binary_entropy_info: bounded by |2p - 1| on a dense grid") {
  for (int k = 0; k <= 10000; ++k) {
    const double p = static_cast<double>(k) / 10000.0;
    CHECK(binary_entropy_info(p) <= std::abs(2.0 * p - 1.0) + 1e-15);
  }
}

TEST_CASE("sd_distributions: identical, disjoint and mixed conditionals") {
  BinaryChannelDist same;
  same.outcomes = {{0.25, 0.25}, {0.75, 0.75}};
  CHECK(sd_distributions(same) == doctest::Approx(0.0).epsilon(1e-15));

  BinaryChannelDist disjoint;
  disjoint.outcomes = {{1.0, 0.0}, {0.0, 1.0}};
  CHECK(sd_distributions(disjoint) == doctest::Approx(1.0).epsilon(1e-15));

  // p0 = (1, 0), p1 = (1/2, 1/2): SD = 1 - (3/4) H(1/3).
  BinaryChannelDist mixed;
  mixed.outcomes = {{1.0, 0.5}, {0.0, 0.5}};
  CHECK(sd_distributions(mixed) ==
        doctest::Approx(0.31127812445913283).epsilon(1e-14));
}

TEST_CASE("sd_distributions: zero iff conditionals equal, never above one") {
  SplitMix64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t outcomes = 2 + rng.next_below(5);
    BinaryChannelDist d;
    double s0 = 0.0, s1 = 0.0;
    for (std::size_t x = 0; x < outcomes; ++x) {
      d.outcomes.push_back({rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)});
      s0 += d.outcomes.back()[0];
      s1 += d.outcomes.back()[1];
    }
    for (auto& o : d.outcomes) {
      o[0] /= s0;
      o[1] /= s1;
    }
    const double sd = sd_distributions(d);
    CHECK(sd >= 0.0);
    CHECK(sd <= 1.0);

    double max_gap = 0.0;
    for (const auto& o : d.outcomes)
      max_gap = std::max(max_gap, std::abs(o[0] - o[1]));
    if (max_gap < 1e-12) CHECK(sd <= 1e-10);
    if (sd < 1e-12) CHECK(max_gap <= 1e-5);
  }
}

TEST_CASE("sd_for_measurement: orthogonal states with a perfect measurement") {
  const Povm e = computational_povm();
  CHECK(sd_for_measurement(ket0_proj(), ket0_proj(), e) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sd_for_measurement(ket0_proj(), ket1_proj(), e) ==
        doctest::Approx(1.0).epsilon(1e-15));
  // |0> vs |+> in the computational basis reduces to the (1,0)/(.5,.5)
  // channel above.
  CHECK(sd_for_measurement(ket0_proj(), plus_proj(), e) ==
        doctest::Approx(0.31127812445913283).epsilon(1e-13));
  CHECK_THROWS_AS(
      (void)sd_for_measurement(Matrix::Identity(3, 3) / 3.0, ket0_proj(), e),
      ShapeError);
}

TEST_CASE("sd_trace_bound: pure-state cases") {
  CHECK(sd_trace_bound(ket0_proj(), ket0_proj()) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sd_trace_bound(ket0_proj(), ket1_proj()) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sd_trace_bound(ket0_proj(), plus_proj()) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-13));
}

TEST_CASE("no measurement beats half the trace norm") {
  SplitMix64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const Index dim = 2 + static_cast<Index>(rng.next_below(7));
    const Matrix rho0 = random_density(dim, rng);
    const Matrix rho1 = random_density(dim, rng);
    const int outcomes = 2 + static_cast<int>(rng.next_below(7));
    const Povm e = random_povm(dim, outcomes, rng);
    CHECK(sd_for_measurement(rho0, rho1, e) <=
          sd_trace_bound(rho0, rho1) + 1e-10);
  }
}

TEST_CASE("random_povm produces valid POVMs") {
  SplitMix64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const Index dim = 2 + static_cast<Index>(rng.next_below(7));
    CHECK_NOTHROW(check_povm(random_povm(dim, 3, rng)));
    CHECK_NOTHROW(check_povm(random_projective_mixture_povm(dim, 3, rng)));
  }
}

TEST_CASE("lift_povm: identity and diagonal expansion") {
  const Povm lifted_id = lift_povm(Povm{{Matrix::Identity(2, 2)}}, 3);
  REQUIRE(lifted_id.elements.size() == 1);
  CHECK(testutil::max_abs_diff(lifted_id.elements[0],
                               Matrix::Identity(6, 6)) == 0.0);

  const Povm lifted = lift_povm(computational_povm(), 2);
  Matrix d0 = Matrix::Zero(4, 4), d1 = Matrix::Zero(4, 4);
  d0(0, 0) = d0(1, 1) = 1.0;
  d1(2, 2) = d1(3, 3) = 1.0;
  CHECK(testutil::max_abs_diff(lifted.elements[0], d0) == 0.0);
  CHECK(testutil::max_abs_diff(lifted.elements[1], d1) == 0.0);
}

TEST_CASE("lifted measurement reproduces traced SD") {
  SplitMix64 rng(24);
  for (int t = 0; t < 100; ++t) {
    const Index d1 = 2, d2 = 2 + static_cast<Index>(rng.next_below(3));
    const Matrix lifted0 = random_density(d1 * d2, rng);
    const Matrix lifted1 = random_density(d1 * d2, rng);
    const Matrix traced0 = partial_trace(lifted0, d1, d2, Keep::First);
    const Matrix traced1 = partial_trace(lifted1, d1, d2, Keep::First);
    const Povm e = random_povm(d1, 2 + static_cast<int>(rng.next_below(3)), rng);
    const double sd_traced = sd_for_measurement(traced0, traced1, e);
    const double sd_lifted =
        sd_for_measurement(lifted0, lifted1, lift_povm(e, d2));
    CHECK(std::abs(sd_traced - sd_lifted) <= 1e-12);
  }
}

TEST_CASE("sd_optimize_small: orthogonal qubit states reach one on the grid") {
  CHECK(sd_optimize_small(ket0_proj(), ket0_proj(), 16) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sd_optimize_small(ket0_proj(), ket1_proj(), 1000) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sd_optimize_small: certified lower bound below the trace bound") {
  const double bound = sd_trace_bound(ket0_proj(), plus_proj());
  const double lower = sd_optimize_small(ket0_proj(), plus_proj(), 200);
  CHECK(lower <= bound + 1e-12);
  // Optimal projective value for two pure states with overlap 1/sqrt(2).
  CHECK(lower == doctest::Approx(0.39912396330714384).epsilon(5e-3));
}

TEST_CASE("sd_optimize_small: monotone along nested grids, dim <= 4 only") {
  SplitMix64 rng(25);
  const Matrix rho0 = random_density(2, rng);
  const Matrix rho1 = random_density(2, rng);
  const double coarse = sd_optimize_small(rho0, rho1, 8);
  const double fine = sd_optimize_small(rho0, rho1, 16);
  const double finer = sd_optimize_small(rho0, rho1, 32);
  CHECK(coarse <= fine + 1e-15);
  CHECK(fine <= finer + 1e-15);

  const Matrix big0 = random_density(5, rng);
  CHECK_THROWS_AS((void)sd_optimize_small(big0, big0, 4), CapacityError);

  // dim 3 and 4 stay below their trace bounds too.
  for (Index dim : {Index{3}, Index{4}}) {
    const Matrix a = random_density(dim, rng);
    const Matrix b = random_density(dim, rng);
    CHECK(sd_optimize_small(a, b, 6) <= sd_trace_bound(a, b) + 1e-12);
  }
}

TEST_CASE("check_povm rejects broken families") {
  Povm not_closing{{ket0_proj(), ket0_proj()}};
  CHECK_THROWS_AS(check_povm(not_closing), ContractError);

  Matrix negative(2, 2);
  negative << -0.5, 0, 0, 0.5;
  Povm with_negative{{negative, Matrix::Identity(2, 2) - negative}};
  CHECK_THROWS_AS(check_povm(with_negative), ContractError);
}
