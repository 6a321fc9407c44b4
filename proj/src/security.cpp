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

#include "bb84sec/security.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bb84sec/infotheory.hpp"
#include "bb84sec/random.hpp"

namespace bb84sec {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void require_key_length(int n, const char* where) {
  if (n > enumeration_cap()) {
    throw CapacityError(std::string(where) + ": n = " + std::to_string(n) +
                        " exceeds enumeration cap " +
                        std::to_string(enumeration_cap()));
  }
}

void require_matrix_dim(int n, const char* where) {
  require_key_length(n, where);
  if ((std::int64_t{1} << n) > kMaxDim) {
    throw CapacityError(std::string(where) + ": matrix dimension 2^" +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxDim));
  }
}

// Stable log2(2^a + 2^b) with -inf handled.
double log2_add(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double m = std::max(a, b);
  return m + std::log2(std::exp2(a - m) + std::exp2(b - m));
}

}  // namespace

PerBitNoise PerBitNoise::from_alphas(std::vector<double> alphas) {
  PerBitNoise noise;
  noise.ps.reserve(alphas.size());
  for (double a : alphas) {
    const double s = std::sin(a);
    noise.ps.push_back(0.5 * s * s);
  }
  noise.alphas = std::move(alphas);
  noise.ps_saturated = true;
  validate_noise(noise);
  return noise;
}

void validate_noise(const PerBitNoise& noise) {
  if (noise.alphas.empty())
    throw ContractError("noise: at least one bit required");
  if (noise.alphas.size() != noise.ps.size())
    throw ContractError("noise: alphas and ps lengths differ");
  for (std::size_t i = 0; i < noise.alphas.size(); ++i) {
    const double a = noise.alphas[i];
    const double p = noise.ps[i];
    if (a < -1e-12 || a > kHalfPi / 2.0 + 1e-12)
      throw ContractError("noise: alpha_" + std::to_string(i + 1) +
                          " outside [0, pi/4]");
    if (p < -1e-12 || p > 1.0 + 1e-12)
      throw ContractError("noise: p_" + std::to_string(i + 1) +
                          " outside [0, 1]");
    if (std::sin(a) > std::sqrt(2.0 * std::max(0.0, p)) + 1e-10)
      throw ContractError("noise: sin(alpha_" + std::to_string(i + 1) +
                          ") exceeds sqrt(2 p_" + std::to_string(i + 1) + ")");
  }
}

double coefficient_d(const BitString& j, const PerBitNoise& noise) {
  if (j.size() != noise.n())
    throw ShapeError("coefficient_d: string length differs from noise length");
  double d = 1.0;
  for (int i = 0; i < j.size(); ++i) {
    d *= j.bit(i) ? std::sin(noise.alphas[static_cast<std::size_t>(i)])
                  : std::cos(noise.alphas[static_cast<std::size_t>(i)]);
  }
  return d;
}

Vector build_psi_x(const BitString& x, const PerBitNoise& noise) {
  const int n = noise.n();
  if (x.size() != n)
    throw ShapeError("build_psi_x: string length differs from noise length");
  require_key_length(n, "build_psi_x");

  const std::uint64_t dim = std::uint64_t{1} << n;
  Vector psi(static_cast<Index>(dim));
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const BitString j = BitString::from_index(idx, n);
    const double sign = dot(x, j) ? -1.0 : 1.0;
    psi(static_cast<Index>(idx)) = Complex(sign * coefficient_d(j, noise), 0.0);
  }
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ConsistencyError("build_psi_x: state norm " + std::to_string(norm) +
                           " differs from 1 beyond 1e-10");
  }
  return psi;
}

Matrix mixture_rho(const ParityCode& code, int key_bit,
                   const PerBitNoise& noise) {
  if (code.n != noise.n())
    throw ShapeError("mixture_rho: code and noise lengths differ");
  require_matrix_dim(code.n, "mixture_rho");
  validate_noise(noise);

  const std::vector<BitString> xs = enumerate_solutions(code, key_bit);
  const Index dim = Index{1} << code.n;
  Matrix rho = Matrix::Zero(dim, dim);
  for (const BitString& x : xs) {
    const Vector psi = build_psi_x(x, noise);
    rho.noalias() += psi * psi.adjoint();
  }
  rho /= static_cast<double>(xs.size());
  return rho;
}

Matrix delta_analytic(const ParityCode& code, const PerBitNoise& noise) {
  validate_code(code);
  if (code.n != noise.n())
    throw ShapeError("delta_analytic: code and noise lengths differ");
  require_matrix_dim(code.n, "delta_analytic");
  validate_noise(noise);

  const int n = code.n;
  const int r = code.r();
  const std::uint64_t dim = std::uint64_t{1} << n;

  std::vector<double> d(dim);
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    d[idx] = coefficient_d(BitString::from_index(idx, n), noise);
  }

  Matrix delta = Matrix::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << r); ++s) {
    BitString shift = code.v;
    int sign_bit = 0;
    for (int i = 0; i < r; ++i) {
      if ((s >> (r - 1 - i)) & 1u) {
        shift = shift ^ code.ecc_strings[static_cast<std::size_t>(i)];
        sign_bit ^= code.ecc_bits[static_cast<std::size_t>(i)];
      }
    }
    const double sign = sign_bit ? -2.0 : 2.0;
    const std::uint64_t shift_idx = shift.to_index();
    for (std::uint64_t j = 0; j < dim; ++j) {
      const std::uint64_t k = j ^ shift_idx;
      delta(static_cast<Index>(j), static_cast<Index>(k)) +=
          Complex(sign * d[j] * d[k], 0.0);
    }
  }
  return delta;
}

TraceNormBound trace_norm_bound(const ParityCode& code,
                                const PerBitNoise& noise) {
  validate_code(code);
  if (code.n != noise.n())
    throw ShapeError("trace_norm_bound: code and noise lengths differ");
  validate_noise(noise);
  const int r = code.r();
  if (r > enumeration_cap()) {
    throw CapacityError("trace_norm_bound: 2^" + std::to_string(r) +
                        " cosets exceed enumeration cap");
  }

  TraceNormBound out;
  out.bound = 0.0;
  out.per_coset.reserve(std::size_t{1} << r);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << r); ++s) {
    BitString shift = code.v;
    for (int i = 0; i < r; ++i) {
      if ((s >> (r - 1 - i)) & 1u)
        shift = shift ^ code.ecc_strings[static_cast<std::size_t>(i)];
    }
    double term = 2.0;
    for (int i = 0; i < code.n; ++i) {
      if (shift.bit(i))
        term *= std::sin(2.0 * noise.alphas[static_cast<std::size_t>(i)]);
    }
    out.per_coset.push_back(term);
    out.bound += term;
  }
  return out;
}

double sd_upper_bound(const ParityCode& code, const PerBitNoise& noise) {
  return std::min(1.0, 0.5 * trace_norm_bound(code, noise).bound);
}

double hoeffding_tail(std::int64_t n_test, double delta) {
  if (n_test < 1) throw std::domain_error("hoeffding_tail: n_test must be >= 1");
  if (!(delta > 0.0)) throw std::domain_error("hoeffding_tail: delta must be > 0");
  return 2.0 * std::exp(-2.0 * static_cast<double>(n_test) * delta * delta);
}

BoundReport total_info_bound(std::int64_t n, std::int64_t r, double alpha_frac,
                             double p_test, double delta, BoundMode mode,
                             const std::vector<double>* weights) {
  if (n < 1) throw std::domain_error("total_info_bound: n must be >= 1");
  if (r < 0) throw std::domain_error("total_info_bound: r must be >= 0");
  if (!(alpha_frac > 0.0) || alpha_frac > 1.0)
    throw std::domain_error("total_info_bound: alpha_frac must be in (0, 1]");
  if (p_test < 0.0)
    throw std::domain_error("total_info_bound: p_test must be >= 0");
  if (!(delta > 0.0))
    throw std::domain_error("total_info_bound: delta must be > 0");

  BoundReport report;
  report.n = n;
  report.r = r;
  report.alpha = alpha_frac;
  report.delta = delta;
  report.p_test = p_test;
  report.mode = to_string(mode);

  const double q = p_test + 2.0 * delta;
  double log2_first;
  if (mode == BoundMode::PerCoset) {
    if (r > enumeration_cap()) {
      throw CapacityError("total_info_bound: per-coset mode needs 2^" +
                          std::to_string(r) + " weights, beyond the cap");
    }
    const std::size_t expected = std::size_t{1} << r;
    if (weights == nullptr || weights->size() != expected) {
      throw std::domain_error("total_info_bound: per-coset mode requires 2^r "
                              "weights");
    }
    log2_first = -std::numeric_limits<double>::infinity();
    report.per_coset_terms.reserve(expected);
    for (double w : *weights) {
      if (w < 1.0)
        throw std::domain_error("total_info_bound: weights must be >= 1");
      const double base = (16.0 * static_cast<double>(n) / w) * q;
      const double log2_term =
          1.0 + 0.5 * w * (base > 0.0
                               ? std::log2(base)
                               : -std::numeric_limits<double>::infinity());
      report.per_coset_terms.push_back(std::exp2(log2_term));
      log2_first = log2_add(log2_first, log2_term);
    }
  } else {
    const double base = (16.0 / alpha_frac) * q;
    log2_first = static_cast<double>(r + 1) +
                 0.5 * alpha_frac * static_cast<double>(n) *
                     (base > 0.0 ? std::log2(base)
                                 : -std::numeric_limits<double>::infinity());
    report.per_coset_terms.push_back(std::exp2(log2_first));
  }

  report.hoeffding_tail = hoeffding_tail(n, delta);
  const double log2_tail = std::log2(report.hoeffding_tail);
  report.log2_total_info_bound =
      std::min(0.0, log2_add(log2_first, log2_tail));
  report.total_info_bound =
      std::min(1.0, std::exp2(log2_first) + report.hoeffding_tail);
  return report;
}

BruteForceReport brute_force_check(const ParityCode& code,
                                   const PerBitNoise& noise, int povm_trials,
                                   std::uint64_t seed) {
  if (code.n > 10)
    throw CapacityError("brute_force_check: n must be <= 10");
  validate_code(code);
  validate_noise(noise);

  BruteForceReport report;
  report.povm_trials = povm_trials;
  std::ostringstream fail;

  const Matrix rho0 = mixture_rho(code, 0, noise);
  const Matrix rho1 = mixture_rho(code, 1, noise);
  const Matrix delta_bf = rho0 - rho1;
  const Matrix delta = delta_analytic(code, noise);

  report.max_delta_entry_diff = (delta - delta_bf).cwiseAbs().maxCoeff();
  if (report.max_delta_entry_diff > 1e-10) {
    report.ok = false;
    fail << "delta_analytic differs from the enumerated mixture difference "
            "by "
         << report.max_delta_entry_diff << " entrywise; ";
  }

  const TraceNormBound bound = trace_norm_bound(code, noise);
  report.trace_norm_brute = trace_norm(delta_bf);
  report.trace_norm_bound_value = bound.bound;
  if (report.trace_norm_brute > bound.bound + 1e-9) {
    report.ok = false;
    fail << "brute-force trace norm " << report.trace_norm_brute
         << " exceeds the analytic bound " << bound.bound << "; ";
  }
  report.tightness_required = (code.r() == 0);
  if (report.tightness_required) {
    report.tightness_gap = std::abs(report.trace_norm_brute - bound.bound);
    if (report.tightness_gap > 1e-9) {
      report.ok = false;
      fail << "r = 0 trace norm should attain the bound, gap "
           << report.tightness_gap << "; ";
    }
  }

  SplitMix64 rng(seed);
  const double half_tn = 0.5 * report.trace_norm_brute;
  for (int t = 0; t < povm_trials; ++t) {
    const int outcomes = 2 + static_cast<int>(rng.next_below(5));
    const Povm povm =
        random_projective_mixture_povm(rho0.rows(), outcomes, rng);
    const double sd = sd_for_measurement(rho0, rho1, povm);
    report.max_sd_violation =
        std::max(report.max_sd_violation, sd - half_tn);
  }
  if (report.max_sd_violation > 1e-10) {
    report.ok = false;
    fail << "a POVM beat half the trace norm by " << report.max_sd_violation
         << "; ";
  }

  if (!report.ok) report.failures.push_back(fail.str());
  return report;
}

}  // namespace bb84sec
