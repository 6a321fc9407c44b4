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

#ifndef BB84SEC_LINALG_HPP
#define BB84SEC_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "bb84sec/common.hpp"

namespace bb84sec {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Which tensor factor partial_trace keeps.
enum class Keep { First, Second };

/// Tensor (Kronecker) product. Blocks are ordered by the first factor's
/// indices: result(i1*rb + i2, j1*cb + j2) = a(i1, j1) * b(i2, j2).
/// Throws CapacityError if a result dimension would exceed kMaxDim.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  const Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (ra * rb > kMaxDim || ca * cb > kMaxDim) {
    throw CapacityError("kron: result dimension " + std::to_string(ra * rb) +
                        "x" + std::to_string(ca * cb) + " exceeds cap " +
                        std::to_string(kMaxDim));
  }
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      ra * rb, ca * cb);
  for (Index i = 0; i < ra; ++i)
    for (Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b.derived();
  return out;
}

/// Partial trace of an operator on a bipartite space of dimensions d1 x d2,
/// with composite index i = i1*d2 + i2 (first factor major, matching kron).
/// Keep::First returns the d1 x d1 reduction, Keep::Second the d2 x d2 one.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
partial_trace(const Eigen::MatrixBase<Derived>& m, Index d1, Index d2,
              Keep keep) {
  if (d1 < 1 || d2 < 1 || m.rows() != d1 * d2 || m.cols() != d1 * d2) {
    throw ShapeError("partial_trace: matrix is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) +
                     ", inconsistent with dims (" + std::to_string(d1) + ", " +
                     std::to_string(d2) + ")");
  }
  using Out = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                            Eigen::Dynamic>;
  if (keep == Keep::First) {
    Out out = Out::Zero(d1, d1);
    for (Index i = 0; i < d1; ++i)
      for (Index j = 0; j < d1; ++j)
        for (Index k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
  }
  Out out = Out::Zero(d2, d2);
  for (Index i = 0; i < d2; ++i)
    for (Index j = 0; j < d2; ++j)
      for (Index k = 0; k < d1; ++k) out(i, j) += m(k * d2 + i, k * d2 + j);
  return out;
}

/// Entrywise Hermitian test: max |M - M^dagger| <= tol.
bool is_hermitian(const Matrix& m, double tol = 1e-10);

/// Checks Hermiticity, positive semidefiniteness (min eigenvalue >= -1e-10)
/// and unit trace (within 1e-10); throws ContractError naming the failure.
void check_density(const Matrix& m);

struct EigenSystem {
  Eigen::VectorXd values;  // descending
  Matrix vectors;          // columns aligned with values
};

/// All eigenvalues of a Hermitian matrix, descending.
///
/// Cyclic two-sided Jacobi rotations on the full complex matrix, iterated
/// until the off-diagonal Frobenius norm drops below 1e-12 (at most 100
/// sweeps; non-convergence throws ConsistencyError, never returns silently).
/// Inputs must be Hermitian within 1e-10 entrywise or ContractError is
/// thrown.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Same iteration, also accumulating the eigenvectors.
EigenSystem hermitian_eigensystem(const Matrix& m);

/// Trace norm of a Hermitian matrix: the sum of the absolute values of its
/// eigenvalues, via hermitian_eigenvalues.
double trace_norm(const Matrix& m);

}  // namespace bb84sec

#endif  // BB84SEC_LINALG_HPP
