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

#ifndef BB84SEC_INFOTHEORY_HPP
#define BB84SEC_INFOTHEORY_HPP

#include <array>
#include <vector>

#include "bb84sec/linalg.hpp"

namespace bb84sec {

/// Conditional outcome distributions of a channel with a uniform binary
/// input: outcomes[x] = (p0(x), p1(x)).
struct BinaryChannelDist {
  std::vector<std::array<double, 2>> outcomes;
};

/// General quantum measurement: positive operators summing to the identity.
struct Povm {
  std::vector<Matrix> elements;

  Index dim() const { return elements.empty() ? 0 : elements[0].rows(); }
  std::size_t size() const { return elements.size(); }
};

/// Throws ContractError if any element is non-Hermitian, has an eigenvalue
/// below -1e-10, or the elements do not sum to the identity within 1e-10.
void check_povm(const Povm& e);

/// Information gained about a uniform input bit from one observation,
/// I2(p) = 1 + p log2 p + (1-p) log2(1-p), with 0 log 0 = 0.
/// p must lie in [0, 1] (up to 1e-12 slack); result is clamped to [0, 1].
double binary_entropy_info(double p);

/// Shannon Distinguishability of two outcome distributions under a uniform
/// input bit: sum_x p(x) I2(p_x(0)) with p(x) = (p0(x) + p1(x)) / 2 and the
/// posterior p_x(0) from the Bayes formula. Probabilities below 1e-15 are
/// treated as zero.
double sd_distributions(const BinaryChannelDist& d);

/// SD of the outcome distributions that the measurement induces on the two
/// states: p_b(x) = Tr(rho_b E_x).
double sd_for_measurement(const Matrix& rho0, const Matrix& rho1,
                          const Povm& e);

/// Measurement-independent bound: (1/2) Tr |rho0 - rho1|. No measurement's
/// SD exceeds it.
double sd_trace_bound(const Matrix& rho0, const Matrix& rho1);

/// Tensors every element with the d2-dimensional identity, giving the POVM
/// that measures only the first factor of a product space.
Povm lift_povm(const Povm& e, Index d2);

/// Certified lower bound on the optimal SD for dimension <= 4, by sweeping a
/// deterministic grid of rank-1 two-outcome projective measurements.
///
/// The projector direction runs over hyperspherical angles: d-1 polar angles
/// on [0, pi/2] with `grid` + 1 points each (endpoints included, so the
/// computational basis is always on the grid) and d-1 phases on [0, 2pi)
/// with `grid` points each. Results are nondecreasing along nested
/// refinements (grid, 2*grid, 4*grid, ...).
double sd_optimize_small(const Matrix& rho0, const Matrix& rho1, int grid);

}  // namespace bb84sec

#endif  // BB84SEC_INFOTHEORY_HPP
