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

#include "bb84sec/attack.hpp"

#include <cmath>
#include <sstream>

#include "bb84sec/random.hpp"

namespace bb84sec {

namespace {
constexpr double kInvariantTol = 1e-10;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << v.invariant << " (residual " << v.residual << ")\n";
  }
  return os.str();
}

ValidationReport validate(const AttackSpec& a) {
  ValidationReport report;
  if (a.probe_dim < 1) {
    report.violations.push_back({"probe_dim must be positive", 0.0});
    return report;
  }
  for (const auto* v : {&a.e00, &a.e01, &a.e10, &a.e11}) {
    if (v->size() != a.probe_dim) {
      report.violations.push_back(
          {"probe vectors must all have length probe_dim", 0.0});
      return report;
    }
  }
  const double row0 = a.e00.squaredNorm() + a.e01.squaredNorm();
  if (std::abs(row0 - 1.0) > kInvariantTol) {
    report.violations.push_back(
        {"<e00|e00> + <e01|e01> = 1", std::abs(row0 - 1.0)});
  }
  const double row1 = a.e10.squaredNorm() + a.e11.squaredNorm();
  if (std::abs(row1 - 1.0) > kInvariantTol) {
    report.violations.push_back(
        {"<e10|e10> + <e11|e11> = 1", std::abs(row1 - 1.0)});
  }
  const double cross = std::abs(a.e00.dot(a.e10) + a.e01.dot(a.e11));
  if (cross > kInvariantTol) {
    report.violations.push_back({"<e00|e10> + <e01|e11> = 0", cross});
  }
  return report;
}

AttackSpec to_x_basis(const AttackSpec& a) {
  const ValidationReport report = validate(a);
  if (!report.ok()) {
    throw ContractError("to_x_basis: invalid attack: " + report.to_string());
  }
  const Vector sum_diag = a.e00 + a.e11;
  const Vector dif_diag = a.e00 - a.e11;
  const Vector sum_off = a.e10 + a.e01;
  const Vector dif_off = a.e10 - a.e01;
  AttackSpec x;
  x.probe_dim = a.probe_dim;
  x.e00 = 0.5 * (sum_diag + sum_off);
  x.e01 = 0.5 * (dif_diag + dif_off);
  x.e10 = 0.5 * (dif_diag - dif_off);
  x.e11 = 0.5 * (sum_diag - sum_off);
  return x;
}

ErrorRates error_rates(const AttackSpec& a) {
  const ValidationReport report = validate(a);
  if (!report.ok()) {
    throw ContractError("error_rates: invalid attack: " + report.to_string());
  }
  const double pe_z =
      0.5 * (a.e01.squaredNorm() + a.e10.squaredNorm());

  const double pe_x_closed =
      0.5 * (1.0 - std::real(a.e00.dot(a.e11) + a.e10.dot(a.e01)));
  const AttackSpec ax = to_x_basis(a);
  const double pe_x_direct =
      0.5 * (ax.e01.squaredNorm() + ax.e10.squaredNorm());
  if (std::abs(pe_x_closed - pe_x_direct) > 1e-8) {
    throw ConsistencyError(
        "error_rates: closed-form and basis-change routes for pe_x differ "
        "by " +
        std::to_string(std::abs(pe_x_closed - pe_x_direct)));
  }

  ErrorRates rates;
  rates.pe_z = std::min(1.0, std::max(0.0, pe_z));
  rates.pe_x = std::min(1.0, std::max(0.0, pe_x_closed));
  rates.pe = 0.5 * (rates.pe_z + rates.pe_x);
  return rates;
}

double PurifiedPair::overlap() const { return std::cos(2.0 * alpha); }

Eigen::Vector2d PurifiedPair::psi0() const {
  return {std::cos(alpha), std::sin(alpha)};
}

Eigen::Vector2d PurifiedPair::psi1() const {
  return {std::cos(alpha), -std::sin(alpha)};
}

PurifiedPair disturbance_angle(const AttackSpec& a, Basis basis) {
  const AttackSpec& spec = a;
  if (basis == Basis::X) {
    return disturbance_angle(to_x_basis(spec), Basis::Z);
  }
  const ValidationReport report = validate(spec);
  if (!report.ok()) {
    throw ContractError("disturbance_angle: invalid attack: " +
                        report.to_string());
  }
  // Roundoff can push the overlap just past 1.
  const double overlap =
      std::min(1.0, std::abs(spec.e00.dot(spec.e11) + spec.e10.dot(spec.e01)));
  return PurifiedPair{0.5 * std::acos(overlap)};
}

AttackSpec random_attack(Index probe_dim, SplitMix64& rng) {
  if (probe_dim < 1) throw ContractError("random_attack: probe_dim must be >= 1");
  // Joint index layout: 2 * p + q for probe state p, qubit state q.
  const Matrix u = random_unitary(2 * probe_dim, rng);
  AttackSpec a;
  a.probe_dim = probe_dim;
  a.e00.resize(probe_dim);
  a.e01.resize(probe_dim);
  a.e10.resize(probe_dim);
  a.e11.resize(probe_dim);
  for (Index p = 0; p < probe_dim; ++p) {
    a.e00(p) = u(2 * p + 0, 0);  // |E>|0> is joint basis state 0
    a.e01(p) = u(2 * p + 1, 0);
    a.e10(p) = u(2 * p + 0, 1);  // |E>|1> is joint basis state 1
    a.e11(p) = u(2 * p + 1, 1);
  }
  return a;
}

}  // namespace bb84sec
