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

#ifndef BB84SEC_SECURITY_HPP
#define BB84SEC_SECURITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bb84sec/gf2.hpp"
#include "bb84sec/linalg.hpp"

namespace bb84sec {

/// Per-bit disturbance of the n key bits: angles alpha_i in [0, pi/4] and
/// Bob's error probabilities p_i, linked by sin(alpha_i) <= sqrt(2 p_i).
struct PerBitNoise {
  std::vector<double> alphas;
  std::vector<double> ps;
  /// True when ps was filled as sin^2(alpha_i)/2, saturating the link in
  /// the eavesdropper's favor. Echoed in reports as worst-case-consistent.
  bool ps_saturated = false;

  int n() const { return static_cast<int>(alphas.size()); }

  static PerBitNoise from_alphas(std::vector<double> alphas);
};

/// Throws ContractError naming the violated invariant.
void validate_noise(const PerBitNoise& noise);

/// d_j = prod_i (cos alpha_i if j_i = 0 else sin alpha_i).
double coefficient_d(const BitString& j, const PerBitNoise& noise);

/// The purification of Eve's state when Alice sent x:
/// Psi_x = sum_j d_j (-1)^(x.j) |j>, a unit vector of dimension 2^n with
/// basis index j big-endian (bit 1 most significant).
Vector build_psi_x(const BitString& x, const PerBitNoise& noise);

/// Equal mixture of |Psi_x><Psi_x| over the 2^(n-r-1) strings x satisfying
/// x.v = key_bit and the error-correction equations.
Matrix mixture_rho(const ParityCode& code, int key_bit,
                   const PerBitNoise& noise);

/// Closed form for mixture_rho(code, 0) - mixture_rho(code, 1):
/// 2 sum_{j,s} d_j d_{j+v+v_s} (-1)^(s.b) |j><j+v+v_s|.
Matrix delta_analytic(const ParityCode& code, const PerBitNoise& noise);

struct TraceNormBound {
  double bound;                   // sum of per_coset
  std::vector<double> per_coset;  // 2 prod_{i in v+v_s} sin(2 alpha_i)
};

/// Analytic bound on Tr|Delta|: per coset s, 2 prod_{i in v+v_s}
/// sin(2 alpha_i), summed over all 2^r cosets. Works at any n; with r = 0
/// the bound is tight. Requires r <= enumeration_cap().
TraceNormBound trace_norm_bound(const ParityCode& code,
                                const PerBitNoise& noise);

/// Bound on the information one measurement can extract about the key bit:
/// min(1, trace_norm_bound / 2).
double sd_upper_bound(const ParityCode& code, const PerBitNoise& noise);

/// Probability that the untested bits are much noisier than the test
/// suggests: 2 exp(-2 n_test delta^2).
double hoeffding_tail(std::int64_t n_test, double delta);

enum class BoundMode { Uniform, PerCoset };

inline const char* to_string(BoundMode m) {
  return m == BoundMode::Uniform ? "uniform" : "per_coset";
}

/// Evaluated analytic bounds for one scenario. Fields are zero when the
/// corresponding computation was not requested (e.g. no concrete code).
struct BoundReport {
  double tr_delta_bound = 0.0;        // analytic bound on Tr|Delta|
  double sd_bound = 0.0;          // tight form: min(1, tr/2)
  double sd_bound_relaxed = 0.0;  // without the factor two: min(1, tr)
  std::vector<double> per_coset_terms;
  double hoeffding_tail = 0.0;  // p_luck
  double total_info_bound = 0.0;
  double log2_total_info_bound = 0.0;

  // parameter echo
  std::int64_t n = 0;
  std::int64_t r = 0;
  double alpha = 0.0;
  double delta = 0.0;
  double p_test = 0.0;
  std::string mode;
  bool ps_worst_case = false;
};

/// Eavesdropper-information bound after a passed test, combining the
/// trace-norm bounds with the Hoeffding tail (n_test = n):
///
///   per-coset: sum_s 2 [(16 n / w_s)(p_test + 2 delta)]^(w_s / 2)
///   uniform:   2^(r+1) [(16 / alpha_frac)(p_test + 2 delta)]^(alpha_frac n / 2)
///
/// plus 2 exp(-2 n delta^2), clamped at one bit. log2_total_info_bound is
/// evaluated in log space and stays meaningful when the linear value
/// underflows. Per-coset mode needs 2^r weights (all >= 1) and r within the
/// enumeration cap.
BoundReport total_info_bound(std::int64_t n, std::int64_t r, double alpha_frac,
                             double p_test, double delta, BoundMode mode,
                             const std::vector<double>* weights = nullptr);

struct BruteForceReport {
  bool ok = true;
  double max_delta_entry_diff = 0.0;   // analytic vs enumerated Delta
  double trace_norm_brute = 0.0;       // Jacobi on the enumerated Delta
  double trace_norm_bound_value = 0.0;
  bool tightness_required = false;     // r = 0: bound must be attained
  double tightness_gap = 0.0;
  double max_sd_violation = -1.0;      // max over POVMs of sd - tr/2;
                                       // <= 0 means every POVM obeyed it
  int povm_trials = 0;
  std::vector<std::string> failures;
};

/// Independent oracle for the closed forms at n <= 10: enumerates both
/// mixtures, compares the difference to delta_analytic entrywise (1e-10),
/// compares the Jacobi trace norm to the analytic bound (<= bound + 1e-9,
/// equality required when r = 0), and checks sd_for_measurement <= half the
/// trace norm over `povm_trials` random POVMs.
BruteForceReport brute_force_check(const ParityCode& code,
                                   const PerBitNoise& noise,
                                   int povm_trials = 100,
                                   std::uint64_t seed = 0x414243444546ULL);

}  // namespace bb84sec

#endif  // BB84SEC_SECURITY_HPP
