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

#include "bb84sec/infotheory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bb84sec {

namespace {

// Probabilities below this are indistinguishable from roundoff of zero.
constexpr double kProbFloor = 1e-15;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// SD of a two-outcome channel given p_b(outcome 0); the complements follow
// from normalization. Shared by sd_distributions' callers that know the
// channel is binary (the projective grid sweep).
double sd_binary_outcome(double p0_first, double p1_first) {
  BinaryChannelDist d;
  d.outcomes = {{p0_first, p1_first}, {1.0 - p0_first, 1.0 - p1_first}};
  return sd_distributions(d);
}

// Unit vector from hyperspherical angles: d-1 polar angles theta in
// [0, pi/2], d-1 phases phi. Component k carries the product of sines of
// all earlier polar angles.
Vector unit_vector_from_angles(const std::vector<double>& theta,
                               const std::vector<double>& phi) {
  const std::size_t d = theta.size() + 1;
  Vector w(static_cast<Index>(d));
  double sines = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    double mag = sines;
    if (k + 1 < d) {
      mag *= std::cos(theta[k]);
      sines *= std::sin(theta[k]);
    }
    const double ph = (k == 0) ? 0.0 : phi[k - 1];
    w(static_cast<Index>(k)) = Complex(mag * std::cos(ph), mag * std::sin(ph));
  }
  return w;
}

}  // namespace

void check_povm(const Povm& e) {
  if (e.elements.empty()) throw ContractError("povm: no elements");
  const Index d = e.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < e.elements.size(); ++k) {
    const Matrix& el = e.elements[k];
    if (el.rows() != d || el.cols() != d) {
      throw ContractError("povm: element " + std::to_string(k) +
                          " has inconsistent dimension");
    }
    if (!is_hermitian(el, 1e-10)) {
      throw ContractError("povm: element " + std::to_string(k) +
                          " is not Hermitian");
    }
    const Eigen::VectorXd ev = hermitian_eigenvalues(el);
    if (ev(ev.size() - 1) < -1e-10) {
      throw ContractError("povm: element " + std::to_string(k) +
                          " has eigenvalue " +
                          std::to_string(ev(ev.size() - 1)) + " below -1e-10");
    }
    sum += el;
  }
  if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
    throw ContractError("povm: elements do not sum to the identity");
  }
}

double binary_entropy_info(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) {
    throw std::domain_error("binary_entropy_info: p = " + std::to_string(p) +
                            " outside [0, 1]");
  }
  p = clamp01(p);
  double v = 1.0;
  if (p > 0.0) v += p * std::log2(p);
  if (p < 1.0) v += (1.0 - p) * std::log2(1.0 - p);
  return clamp01(v);
}

double sd_distributions(const BinaryChannelDist& d) {
  double s0 = 0.0, s1 = 0.0;
  for (const auto& o : d.outcomes) {
    if (o[0] < -1e-12 || o[1] < -1e-12) {
      throw ContractError("sd_distributions: negative probability beyond "
                          "tolerance");
    }
    s0 += std::max(0.0, o[0]);
    s1 += std::max(0.0, o[1]);
  }
  if (std::abs(s0 - 1.0) > 1e-10 || std::abs(s1 - 1.0) > 1e-10) {
    throw ContractError("sd_distributions: conditionals do not sum to 1");
  }

  double sd = 0.0;
  for (const auto& o : d.outcomes) {
    const double p0 = std::max(0.0, o[0]);
    const double p1 = std::max(0.0, o[1]);
    const double px = 0.5 * (p0 + p1);
    if (px <= kProbFloor) continue;
    const double posterior = 0.5 * p0 / px;
    sd += px * binary_entropy_info(clamp01(posterior));
  }
  return clamp01(sd);
}

double sd_for_measurement(const Matrix& rho0, const Matrix& rho1,
                          const Povm& e) {
  const Index d = e.dim();
  if (rho0.rows() != d || rho0.cols() != d || rho1.rows() != d ||
      rho1.cols() != d) {
    throw ShapeError("sd_for_measurement: state and POVM dimensions differ");
  }
  BinaryChannelDist dist;
  dist.outcomes.reserve(e.elements.size());
  for (const Matrix& el : e.elements) {
    const double p0 = std::real((rho0 * el).trace());
    const double p1 = std::real((rho1 * el).trace());
    dist.outcomes.push_back({std::max(0.0, p0), std::max(0.0, p1)});
  }
  return sd_distributions(dist);
}

double sd_trace_bound(const Matrix& rho0, const Matrix& rho1) {
  if (rho0.rows() != rho1.rows() || rho0.cols() != rho1.cols()) {
    throw ShapeError("sd_trace_bound: state dimensions differ");
  }
  return 0.5 * trace_norm(rho0 - rho1);
}

Povm lift_povm(const Povm& e, Index d2) {
  if (d2 < 1) throw ShapeError("lift_povm: d2 must be positive");
  const Matrix id2 = Matrix::Identity(d2, d2);
  Povm out;
  out.elements.reserve(e.elements.size());
  for (const Matrix& el : e.elements) out.elements.push_back(kron(el, id2));
  return out;
}

double sd_optimize_small(const Matrix& rho0, const Matrix& rho1, int grid) {
  const Index d = rho0.rows();
  if (d > 4) {
    throw CapacityError("sd_optimize_small: dimension " + std::to_string(d) +
                        " unsupported (max 4)");
  }
  if (rho0.cols() != d || rho1.rows() != d || rho1.cols() != d) {
    throw ShapeError("sd_optimize_small: states must be square and equal-"
                     "dimensional");
  }
  if (grid < 1) throw std::domain_error("sd_optimize_small: grid must be >= 1");
  if (d == 1) return 0.0;

  const std::size_t n_angles = static_cast<std::size_t>(d - 1);
  std::vector<double> theta(n_angles, 0.0), phi(n_angles, 0.0);
  // Odometer over (grid + 1) polar steps and grid phase steps per angle.
  std::vector<int> idx(2 * n_angles, 0);
  const double dtheta = (M_PI / 2.0) / grid;
  const double dphi = (2.0 * M_PI) / grid;

  double best = 0.0;
  bool done = false;
  while (!done) {
    for (std::size_t k = 0; k < n_angles; ++k) {
      theta[k] = idx[k] * dtheta;
      phi[k] = idx[n_angles + k] * dphi;
    }
    const Vector w = unit_vector_from_angles(theta, phi);
    const double p0 = std::max(0.0, std::real(w.dot(rho0 * w)));
    const double p1 = std::max(0.0, std::real(w.dot(rho1 * w)));
    best = std::max(best, sd_binary_outcome(std::min(1.0, p0),
                                            std::min(1.0, p1)));

    done = true;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const int limit = (k < n_angles) ? grid + 1 : grid;
      if (++idx[k] < limit) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
  }
  return best;
}

}  // namespace bb84sec
