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

#include "bb84sec/gf2.hpp"

#include <algorithm>
#include <bit>

namespace bb84sec {

namespace {
std::size_t words_for(int n) {
  return static_cast<std::size_t>((n + 63) / 64);
}
}  // namespace

BitString::BitString(int n) : n_(n), words_(words_for(n), 0) {
  if (n < 1) throw ContractError("BitString: length must be positive");
}

BitString BitString::from_string(std::string_view s) {
  BitString out(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') {
      throw ContractError("BitString: character '" + std::string(1, s[i]) +
                          "' is not 0/1");
    }
    out.set(static_cast<int>(i), s[i] == '1');
  }
  return out;
}

BitString BitString::from_index(std::uint64_t index, int n) {
  BitString out(n);
  for (int i = 0; i < n; ++i) {
    out.set(i, (index >> (n - 1 - i)) & 1u);
  }
  return out;
}

bool BitString::bit(int i) const {
  return (words_[static_cast<std::size_t>(i) / 64] >>
          (static_cast<std::size_t>(i) % 64)) &
         1u;
}

void BitString::set(int i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (static_cast<std::size_t>(i) % 64);
  if (value)
    words_[static_cast<std::size_t>(i) / 64] |= mask;
  else
    words_[static_cast<std::size_t>(i) / 64] &= ~mask;
}

int BitString::weight() const {
  int w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

bool BitString::any() const {
  for (std::uint64_t word : words_)
    if (word != 0) return true;
  return false;
}

std::uint64_t BitString::to_index() const {
  if (n_ > 62) throw CapacityError("BitString::to_index: length exceeds 62");
  std::uint64_t idx = 0;
  for (int i = 0; i < n_; ++i) idx = (idx << 1) | (bit(i) ? 1u : 0u);
  return idx;
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

BitString BitString::operator^(const BitString& other) const {
  if (n_ != other.n_) throw ShapeError("BitString xor: length mismatch");
  BitString out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] ^= other.words_[w];
  return out;
}

bool BitString::operator<(const BitString& other) const {
  const int m = std::min(n_, other.n_);
  for (int i = 0; i < m; ++i) {
    if (bit(i) != other.bit(i)) return other.bit(i);
  }
  return n_ < other.n_;
}

int dot(const BitString& x, const BitString& v) {
  if (x.n_ != v.n_) throw ShapeError("dot: length mismatch");
  int parity = 0;
  for (std::size_t w = 0; w < x.words_.size(); ++w) {
    parity ^= std::popcount(x.words_[w] & v.words_[w]) & 1;
  }
  return parity;
}

bool is_independent(const std::vector<BitString>& vs) {
  if (vs.empty()) return true;
  const int n = vs[0].size();
  for (const BitString& v : vs) {
    if (v.size() != n) throw ShapeError("is_independent: length mismatch");
  }
  std::vector<BitString> rows = vs;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].bit(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].bit(col)) rows[r] = rows[r] ^ rows[rank];
    }
    ++rank;
  }
  return rank == rows.size();
}

void validate_code(const ParityCode& code) {
  if (code.n < 1) throw ContractError("code: n must be positive");
  if (code.v.size() != code.n)
    throw ContractError("code: v has length " + std::to_string(code.v.size()) +
                        ", expected n = " + std::to_string(code.n));
  if (code.ecc_bits.size() != code.ecc_strings.size())
    throw ContractError("code: ecc_strings and ecc_bits lengths differ");
  if (code.r() >= code.n)
    throw ContractError("code: r = " + std::to_string(code.r()) +
                        " must be < n = " + std::to_string(code.n));
  if (!code.v.any())
    throw ContractError("code: v = 0...0 is degenerate (key bit constant)");
  for (std::size_t i = 0; i < code.ecc_strings.size(); ++i) {
    if (code.ecc_strings[i].size() != code.n)
      throw ContractError("code: ecc string " + std::to_string(i) +
                          " has wrong length");
    if (code.ecc_bits[i] != 0 && code.ecc_bits[i] != 1)
      throw ContractError("code: ecc bit " + std::to_string(i) +
                          " is not 0/1");
  }
  std::vector<BitString> all = {code.v};
  all.insert(all.end(), code.ecc_strings.begin(), code.ecc_strings.end());
  if (!is_independent(all))
    throw ContractError(
        "code: v, v_1..v_r are not linearly independent over GF(2)");
}

std::vector<BitString> enumerate_solutions(const ParityCode& code,
                                           int key_bit) {
  validate_code(code);
  if (key_bit != 0 && key_bit != 1)
    throw ContractError("enumerate_solutions: key_bit must be 0/1");
  const int n = code.n;
  const int rows_count = code.r() + 1;
  const int free_count = n - rows_count;
  if (free_count > enumeration_cap()) {
    throw CapacityError("enumerate_solutions: 2^" + std::to_string(free_count) +
                        " solutions exceed enumeration cap 2^" +
                        std::to_string(enumeration_cap()));
  }

  // Row-reduce the augmented system [v | key_bit], [v_i | b_i].
  std::vector<BitString> lhs = {code.v};
  std::vector<int> rhs = {key_bit};
  for (std::size_t i = 0; i < code.ecc_strings.size(); ++i) {
    lhs.push_back(code.ecc_strings[i]);
    rhs.push_back(code.ecc_bits[i]);
  }
  std::vector<int> pivot_col(static_cast<std::size_t>(rows_count), -1);
  int rank = 0;
  for (int col = 0; col < n && rank < rows_count; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_count; ++r) {
      if (lhs[static_cast<std::size_t>(r)].bit(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(lhs[static_cast<std::size_t>(rank)], lhs[static_cast<std::size_t>(pivot)]);
    std::swap(rhs[static_cast<std::size_t>(rank)], rhs[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < rows_count; ++r) {
      if (r != rank && lhs[static_cast<std::size_t>(r)].bit(col)) {
        lhs[static_cast<std::size_t>(r)] =
            lhs[static_cast<std::size_t>(r)] ^ lhs[static_cast<std::size_t>(rank)];
        rhs[static_cast<std::size_t>(r)] ^= rhs[static_cast<std::size_t>(rank)];
      }
    }
    pivot_col[static_cast<std::size_t>(rank)] = col;
    ++rank;
  }
  if (rank != rows_count) {
    throw ConsistencyError("enumerate_solutions: system lost rank after "
                           "validation");
  }

  std::vector<int> free_cols;
  free_cols.reserve(static_cast<std::size_t>(free_count));
  {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int col = 0; col < n; ++col)
      if (!is_pivot[static_cast<std::size_t>(col)]) free_cols.push_back(col);
  }

  std::vector<BitString> out;
  out.reserve(std::size_t{1} << free_count);
  for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << free_count);
       ++assign) {
    BitString x(n);
    for (int k = 0; k < free_count; ++k) {
      x.set(free_cols[static_cast<std::size_t>(k)],
            (assign >> (free_count - 1 - k)) & 1u);
    }
    // Back-substitute: in RREF each pivot row has exactly one pivot bit.
    for (int r = 0; r < rows_count; ++r) {
      int value = rhs[static_cast<std::size_t>(r)];
      const BitString& row = lhs[static_cast<std::size_t>(r)];
      for (int k = 0; k < free_count; ++k) {
        const int col = free_cols[static_cast<std::size_t>(k)];
        if (row.bit(col) && x.bit(col)) value ^= 1;
      }
      x.set(pivot_col[static_cast<std::size_t>(r)], value);
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CosetWeightReport coset_weights(const ParityCode& code) {
  validate_code(code);
  const int r = code.r();
  if (r > enumeration_cap()) {
    throw CapacityError("coset_weights: 2^" + std::to_string(r) +
                        " cosets exceed enumeration cap 2^" +
                        std::to_string(enumeration_cap()));
  }
  CosetWeightReport report;
  report.entries.reserve(std::size_t{1} << r);
  report.n_hat = code.n + 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << r); ++s) {
    BitString vs = code.v;
    for (int i = 0; i < r; ++i) {
      if ((s >> (r - 1 - i)) & 1u) vs = vs ^ code.ecc_strings[static_cast<std::size_t>(i)];
    }
    const int w = vs.weight();
    // With r = 0 the lone coset label is the empty string; store "0".
    report.entries.push_back(
        {r > 0 ? BitString::from_index(s, r) : BitString(1), w});
    report.n_hat = std::min(report.n_hat, w);
  }
  report.alpha = static_cast<double>(report.n_hat) / code.n;
  return report;
}

}  // namespace bb84sec
