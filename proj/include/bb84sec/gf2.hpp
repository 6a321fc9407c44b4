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

#ifndef BB84SEC_GF2_HPP
#define BB84SEC_GF2_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bb84sec/common.hpp"

namespace bb84sec {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Position 0 is the leftmost bit of the text form. The basis-index mapping
/// used throughout the project is big-endian: a string of length n maps to
/// the integer sum_i bit(i) * 2^(n-1-i), so "10" -> 2. With that convention,
/// lexicographic order of strings coincides with numeric order of indices.
class BitString {
 public:
  BitString() = default;
  explicit BitString(int n);
  static BitString from_string(std::string_view s);
  static BitString from_index(std::uint64_t index, int n);

  int size() const { return n_; }
  bool bit(int i) const;
  void set(int i, bool value);
  int weight() const;
  bool any() const;
  std::uint64_t to_index() const;  // requires size() <= 62
  std::string to_string() const;

  BitString operator^(const BitString& other) const;
  bool operator==(const BitString& other) const = default;
  bool operator<(const BitString& other) const;  // lexicographic

  /// Inner product mod 2.
  friend int dot(const BitString& x, const BitString& v);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// True iff the set has full rank under GF(2) Gaussian elimination.
bool is_independent(const std::vector<BitString>& vs);

/// Privacy-amplification string v plus r error-correction equations
/// v_i . x = b_i. The r + 1 strings v, v_1..v_r must be linearly
/// independent (which also excludes v = 0).
struct ParityCode {
  int n = 0;
  BitString v;
  std::vector<BitString> ecc_strings;
  std::vector<int> ecc_bits;

  int r() const { return static_cast<int>(ecc_strings.size()); }
};

/// Throws ContractError naming the violated invariant.
void validate_code(const ParityCode& code);

/// All x with x . v = key_bit and x . v_i = b_i, in lexicographic order.
/// There are exactly 2^(n - r - 1) of them. Throws CapacityError when
/// n - r - 1 exceeds enumeration_cap().
std::vector<BitString> enumerate_solutions(const ParityCode& code,
                                           int key_bit);

struct CosetWeight {
  BitString s;  // length r
  int weight;   // Hamming weight of v XOR v_s
};

struct CosetWeightReport {
  std::vector<CosetWeight> entries;  // indexed by s as a big-endian integer
  int n_hat = 0;                     // min_s weight
  double alpha = 0.0;                // n_hat / n
};

/// Weight of v XOR v_s for every s in {0,1}^r, where v_s = sum s_i v_i.
/// Linear independence guarantees every weight is at least 1.
CosetWeightReport coset_weights(const ParityCode& code);

}  // namespace bb84sec

#endif  // BB84SEC_GF2_HPP
