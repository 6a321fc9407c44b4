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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "bb84sec/gf2.hpp"
#include "testutil.hpp"

using namespace bb84sec;

TEST_CASE("BitString: text round trip, indices, weight") {
  const BitString s = BitString::from_string("10110");
  CHECK(s.size() == 5);
  CHECK(s.to_string() == "10110");
  CHECK(s.weight() == 3);
  CHECK(s.to_index() == 22);  // big-endian
  CHECK(BitString::from_index(22, 5) == s);
  CHECK(BitString::from_string("10") .to_index() == 2);
  CHECK_FALSE(BitString(4).any());
  CHECK((s ^ s) == BitString(5));
}

TEST_CASE("dot: zero string, hand-counted case, linearity") {
  const BitString zero(4);
  CHECK(dot(BitString::from_string("1011"), zero) == 0);
  CHECK(dot(BitString::from_string("1010"), BitString::from_string("1110")) ==
        0);
  CHECK(dot(BitString::from_string("1010"), BitString::from_string("1100")) ==
        1);
  CHECK_THROWS_AS((void)dot(BitString(3), BitString(4)), ShapeError);

  SplitMix64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng.next_below(80));
    BitString x(n), y(n), v(n);
    for (int i = 0; i < n; ++i) {
      x.set(i, rng.next_bit());
      y.set(i, rng.next_bit());
      v.set(i, rng.next_bit());
    }
    CHECK((dot(x, v) ^ dot(y, v)) == dot(x ^ y, v));
  }
}

TEST_CASE("is_independent: canonical cases") {
  CHECK(is_independent({BitString::from_string("100"),
                        BitString::from_string("010"),
                        BitString::from_string("001")}));
  // These three sum to zero.
  CHECK_FALSE(is_independent({BitString::from_string("110"),
                              BitString::from_string("011"),
                              BitString::from_string("101")}));
  CHECK_FALSE(is_independent({BitString::from_string("000")}));
  CHECK_FALSE(is_independent(
      {BitString::from_string("101"), BitString::from_string("000")}));
}

TEST_CASE("validate_code rejects the degenerate and dependent cases") {
  ParityCode ok;
  ok.n = 3;
  ok.v = BitString::from_string("111");
  ok.ecc_strings = {BitString::from_string("100")};
  ok.ecc_bits = {0};
  CHECK_NOTHROW(validate_code(ok));

  ParityCode zero_v = ok;
  zero_v.v = BitString(3);
  CHECK_THROWS_AS(validate_code(zero_v), ContractError);

  ParityCode dependent = ok;
  dependent.ecc_strings = {BitString::from_string("111")};
  CHECK_THROWS_AS(validate_code(dependent), ContractError);

  ParityCode too_many = ok;  // r = n is rejected
  too_many.ecc_strings = {BitString::from_string("100"),
                          BitString::from_string("010"),
                          BitString::from_string("001")};
  too_many.ecc_bits = {0, 1, 0};
  CHECK_THROWS_AS(validate_code(too_many), ContractError);
}

TEST_CASE("enumerate_solutions: two-bit parities") {
  ParityCode code;
  code.n = 2;
  code.v = BitString::from_string("11");

  const auto even = enumerate_solutions(code, 0);
  REQUIRE(even.size() == 2);
  CHECK(even[0].to_string() == "00");
  CHECK(even[1].to_string() == "11");

  const auto odd = enumerate_solutions(code, 1);
  REQUIRE(odd.size() == 2);
  CHECK(odd[0].to_string() == "01");
  CHECK(odd[1].to_string() == "10");
}

TEST_CASE("enumerate_solutions: three bits with one ecc constraint") {
  ParityCode code;
  code.n = 3;
  code.v = BitString::from_string("111");
  code.ecc_strings = {BitString::from_string("100")};
  code.ecc_bits = {0};
  const auto xs = enumerate_solutions(code, 0);
  REQUIRE(xs.size() == 2);
  CHECK(xs[0].to_string() == "000");
  CHECK(xs[1].to_string() == "011");
}

TEST_CASE("enumerate_solutions: partition and reduction properties") {
  SplitMix64 rng(42);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const int r = static_cast<int>(rng.next_below(
        static_cast<std::uint64_t>(std::min(4, n))));
    const ParityCode code = testutil::random_code(n, r, rng);

    const auto zero = enumerate_solutions(code, 0);
    const auto one = enumerate_solutions(code, 1);
    CHECK(zero.size() == (std::size_t{1} << (n - r - 1)));
    CHECK(one.size() == (std::size_t{1} << (n - r - 1)));

    std::set<std::string> all;
    for (const auto& x : zero) all.insert(x.to_string());
    for (const auto& x : one) all.insert(x.to_string());
    CHECK(all.size() == zero.size() + one.size());  // disjoint

    // Every solution satisfies its constraints, and for every coset label s
    // the reduction x . (v ^ v_s) = key ^ s.b holds.
    for (int key = 0; key <= 1; ++key) {
      const auto& xs = key == 0 ? zero : one;
      for (const auto& x : xs) {
        CHECK(dot(x, code.v) == key);
        for (int i = 0; i < r; ++i) {
          CHECK(dot(x, code.ecc_strings[static_cast<std::size_t>(i)]) ==
                code.ecc_bits[static_cast<std::size_t>(i)]);
        }
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << r); ++s) {
          BitString vs = code.v;
          int sb = 0;
          for (int i = 0; i < r; ++i) {
            if ((s >> (r - 1 - i)) & 1u) {
              vs = vs ^ code.ecc_strings[static_cast<std::size_t>(i)];
              sb ^= code.ecc_bits[static_cast<std::size_t>(i)];
            }
          }
          CHECK(dot(x, vs) == (key ^ sb));
        }
      }
    }

    // Lexicographic output order.
    CHECK(std::is_sorted(zero.begin(), zero.end()));
    CHECK(std::is_sorted(one.begin(), one.end()));
  }
}

TEST_CASE("enumerate_solutions: capacity error beyond the cap") {
  ParityCode code;
  code.n = 40;
  code.v = BitString::from_string("1000000000100000000010000000001000000000");
  CHECK_THROWS_AS((void)enumerate_solutions(code, 0), CapacityError);
}

TEST_CASE("coset_weights: r = 0 and a two-coset example") {
  ParityCode plain;
  plain.n = 3;
  plain.v = BitString::from_string("110");
  const CosetWeightReport r0 = coset_weights(plain);
  REQUIRE(r0.entries.size() == 1);
  CHECK(r0.n_hat == 2);
  CHECK(r0.alpha == doctest::Approx(2.0 / 3.0));

  ParityCode code;
  code.n = 3;
  code.v = BitString::from_string("110");
  code.ecc_strings = {BitString::from_string("011")};
  code.ecc_bits = {1};
  const CosetWeightReport cw = coset_weights(code);
  REQUIRE(cw.entries.size() == 2);
  CHECK(cw.entries[0].weight == 2);  // v itself
  CHECK(cw.entries[1].weight == 2);  // v ^ v_1 = 101
  CHECK(cw.n_hat == 2);
}

TEST_CASE("coset_weights: every weight in [1, n]") {
  SplitMix64 rng(44);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.next_below(9));
    const int r = static_cast<int>(rng.next_below(
        static_cast<std::uint64_t>(std::min(4, n))));
    const ParityCode code = testutil::random_code(n, r, rng);
    const CosetWeightReport cw = coset_weights(code);
    CHECK(cw.entries.size() == (std::size_t{1} << r));
    for (const CosetWeight& e : cw.entries) {
      CHECK(e.weight >= 1);  // n_hat = 0 would contradict independence
      CHECK(e.weight <= n);
    }
    CHECK(cw.n_hat >= 1);
  }
}
