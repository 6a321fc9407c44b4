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

#include "bb84sec/random.hpp"

#include <cmath>
#include <stdexcept>

namespace bb84sec {

Matrix random_hermitian(Index dim, SplitMix64& rng) {
  Matrix a(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i)
      a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return 0.5 * (a + a.adjoint());
}

Matrix random_density(Index dim, SplitMix64& rng) {
  Matrix g(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) g(i, j) = Complex(rng.normal(), rng.normal());
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

Matrix random_unitary(Index dim, SplitMix64& rng) {
  Matrix u = Matrix::Identity(dim, dim);
  for (Index p = 0; p < dim - 1; ++p) {
    for (Index q = p + 1; q < dim; ++q) {
      const double theta = rng.uniform(0.0, 2.0 * M_PI);
      const double phase = rng.uniform(0.0, 2.0 * M_PI);
      const double c = std::cos(theta), s = std::sin(theta);
      const Complex e = Complex(std::cos(phase), std::sin(phase));
      const Vector colp = c * u.col(p) - std::conj(e) * s * u.col(q);
      u.col(q) = e * s * u.col(p) + c * u.col(q);
      u.col(p) = colp;
    }
  }
  for (Index k = 0; k < dim; ++k) {
    const double phase = rng.uniform(0.0, 2.0 * M_PI);
    u.col(k) *= Complex(std::cos(phase), std::sin(phase));
  }
  return u;
}

Povm random_povm(Index dim, int outcomes, SplitMix64& rng) {
  if (outcomes < 1) throw std::domain_error("random_povm: outcomes must be >= 1");
  std::vector<Matrix> raw;
  raw.reserve(static_cast<std::size_t>(outcomes));
  Matrix s = Matrix::Zero(dim, dim);
  for (int k = 0; k < outcomes; ++k) {
    Matrix g(dim, dim);
    for (Index j = 0; j < dim; ++j)
      for (Index i = 0; i < dim; ++i)
        g(i, j) = Complex(rng.normal(), rng.normal());
    Matrix a = g * g.adjoint();
    a = 0.5 * (a + a.adjoint());
    raw.push_back(a);
    s += a;
  }
  const EigenSystem es = hermitian_eigensystem(s);
  Eigen::VectorXd inv_sqrt(es.values.size());
  for (Index i = 0; i < es.values.size(); ++i) {
    // s is a sum of full-rank PSD terms; guard anyway.
    inv_sqrt(i) = 1.0 / std::sqrt(std::max(es.values(i), 1e-300));
  }
  const Matrix w =
      es.vectors * inv_sqrt.asDiagonal() * es.vectors.adjoint();
  Povm povm;
  povm.elements.reserve(raw.size());
  for (const Matrix& a : raw) {
    Matrix el = w * a * w;
    povm.elements.push_back(0.5 * (el + el.adjoint()));
  }
  return povm;
}

Povm random_projective_mixture_povm(Index dim, int outcomes, SplitMix64& rng) {
  if (outcomes < 1)
    throw std::domain_error("random_projective_mixture_povm: outcomes must be >= 1");
  Matrix g(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) g(i, j) = Complex(rng.normal(), rng.normal());
  const Matrix basis = Eigen::HouseholderQR<Matrix>(g).householderQ();
  const double mix = rng.uniform(0.1, 0.9);

  std::vector<double> weights(static_cast<std::size_t>(outcomes));
  double wsum = 0.0;
  for (double& w : weights) {
    w = rng.uniform(0.0, 1.0) + 1e-3;
    wsum += w;
  }

  Povm povm;
  povm.elements.assign(static_cast<std::size_t>(outcomes),
                       Matrix::Zero(dim, dim));
  for (Index i = 0; i < dim; ++i) {
    const auto bin = static_cast<std::size_t>(
        rng.next_below(static_cast<std::uint64_t>(outcomes)));
    const Vector v = basis.col(i);
    povm.elements[bin] += (1.0 - mix) * (v * v.adjoint());
  }
  for (int k = 0; k < outcomes; ++k) {
    povm.elements[static_cast<std::size_t>(k)] +=
        (mix * weights[static_cast<std::size_t>(k)] / wsum) *
        Matrix::Identity(dim, dim);
  }
  return povm;
}

}  // namespace bb84sec
