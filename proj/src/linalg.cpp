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

#include "bb84sec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace bb84sec {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-12;  // Frobenius norm of the off-diagonal

double off_diagonal_norm(const Matrix& a) {
  const Index n = a.rows();
  double s = 0.0;
  for (Index q = 0; q < n; ++q)
    for (Index p = 0; p < n; ++p)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// One cyclic Jacobi pass over all (p, q) pairs of the Hermitian matrix `a`,
// optionally accumulating the rotations into `v`. Annihilates a(p, q) by the
// two-sided unitary that diagonalizes the 2x2 subproblem; the complex phase
// of a(p, q) is absorbed into the rotation so the reduced problem is real.
void jacobi_sweep(Matrix& a, Matrix* v, double skip_below) {
  const Index n = a.rows();
  for (Index p = 0; p < n - 1; ++p) {
    for (Index q = p + 1; q < n; ++q) {
      const Complex g = a(p, q);
      const double ag = std::abs(g);
      if (ag <= skip_below) continue;
      const Complex u = g / ag;
      const double app = std::real(a(p, p));
      const double aqq = std::real(a(q, q));
      const double tau = (aqq - app) / (2.0 * ag);
      const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const Complex su = s * u;

      // Columns of A * J; the (p,q) 2x2 block is then written in closed
      // form and rows p, q are mirrored from the columns to keep the
      // matrix exactly Hermitian.
      const Vector colp = c * a.col(p) - std::conj(su) * a.col(q);
      a.col(q) = su * a.col(p) + c * a.col(q);
      a.col(p) = colp;
      a(p, p) = Complex(app - t * ag, 0.0);
      a(q, q) = Complex(aqq + t * ag, 0.0);
      a(p, q) = Complex(0.0, 0.0);
      a(q, p) = Complex(0.0, 0.0);
      a.row(p) = a.col(p).adjoint().eval();
      a.row(q) = a.col(q).adjoint().eval();

      if (v != nullptr) {
        const Vector vp = c * v->col(p) - std::conj(su) * v->col(q);
        v->col(q) = su * v->col(p) + c * v->col(q);
        v->col(p) = vp;
      }
    }
  }
}

EigenSystem jacobi_eigensystem(const Matrix& m, bool want_vectors) {
  const Index n = m.rows();
  if (n < 1 || m.cols() != n) {
    throw ShapeError("hermitian eigensolver: matrix must be square, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!is_hermitian(m, 1e-10)) {
    throw ContractError(
        "hermitian eigensolver: input is not Hermitian within 1e-10");
  }

  Matrix a = 0.5 * (m + m.adjoint());
  Matrix v;
  if (want_vectors) v = Matrix::Identity(n, n);

  // Rotations below this threshold cannot lift the off-diagonal norm above
  // the convergence target even if every pair is skipped.
  const double skip_below = kOffDiagTol / (8.0 * static_cast<double>(n));

  bool converged = off_diagonal_norm(a) <= kOffDiagTol;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    jacobi_sweep(a, want_vectors ? &v : nullptr, skip_below);
    converged = off_diagonal_norm(a) <= kOffDiagTol;
  }
  if (!converged) {
    throw ConsistencyError(
        "hermitian eigensolver: off-diagonal norm above 1e-12 after 100 "
        "sweeps");
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&a](Index i, Index j) {
    return std::real(a(i, i)) > std::real(a(j, j));
  });

  EigenSystem out;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    out.values[k] = std::real(a(order[static_cast<std::size_t>(k)],
                                order[static_cast<std::size_t>(k)]));
    if (want_vectors)
      out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void check_density(const Matrix& m) {
  if (!is_hermitian(m, 1e-12)) {
    throw ContractError("density check: matrix is not Hermitian within 1e-12");
  }
  const double tr = std::real(m.trace());
  if (std::abs(tr - 1.0) > 1e-10) {
    throw ContractError("density check: trace is " + std::to_string(tr) +
                        ", expected 1 within 1e-10");
  }
  const Eigen::VectorXd ev = hermitian_eigenvalues(m);
  if (ev(ev.size() - 1) < -1e-10) {
    throw ContractError("density check: min eigenvalue " +
                        std::to_string(ev(ev.size() - 1)) + " below -1e-10");
  }
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  return jacobi_eigensystem(m, false).values;
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
  return jacobi_eigensystem(m, true);
}

double trace_norm(const Matrix& m) {
  return hermitian_eigenvalues(m).cwiseAbs().sum();
}

}  // namespace bb84sec
