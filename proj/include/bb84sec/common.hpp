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

#ifndef BB84SEC_COMMON_HPP
#define BB84SEC_COMMON_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bb84sec {

/// Hard ceiling on the dimension of any matrix assembled from tensor
/// products (2^12). Desk-scale brute-force oracles stay well below it.
inline constexpr std::int64_t kMaxDim = 4096;

/// A requested object would exceed a configured size limit.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix/vector dimensions are inconsistent with the operation.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition on the input was violated.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two internal computation routes disagreed, or an iteration failed to
/// converge. Always indicates a bug or numerically hostile input.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The protocol cannot proceed (e.g. sifting left no bits).
struct ProtocolAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cap on brute-force enumeration (number of free GF(2) variables, key
/// length for explicit state construction). Default 20; override with the
/// BB84SEC_ENUM_CAP environment variable. Read on every call so the
/// override also works mid-process.
inline int enumeration_cap() {
  if (const char* env = std::getenv("BB84SEC_ENUM_CAP")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 62) return static_cast<int>(v);
  }
  return 20;
}

}  // namespace bb84sec

#endif  // BB84SEC_COMMON_HPP
