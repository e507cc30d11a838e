// Copyright 2026 The zkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "zkit/error.hpp"
#include "zkit/field.hpp"

using namespace zkit;

namespace {

std::vector<int> primes_upto(int n) {
  std::vector<int> out;
  for (int p = 5; p <= n; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<int> values(const std::vector<FieldScalar>& xs) {
  std::vector<int> v;
  for (const auto& x : xs) v.push_back(x.value());
  return v;
}

}  // namespace

TEST_CASE("construction rejects composites and tiny primes") {
  for (int p : {-7, 0, 1, 2, 3, 4, 6, 9, 15, 25, 91}) {
    CHECK_THROWS_AS(Field{p}, Error);
    try {
      Field f(p);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPrime);
    }
  }
  CHECK_NOTHROW(Field{5});
  CHECK_NOTHROW(Field{101});
}

TEST_CASE("values are reduced") {
  Field f(7);
  CHECK(f(9).value() == 2);
  CHECK(f(-1).value() == 6);
  CHECK(f(-15).value() == 6);
  CHECK((f(5) + f(4)).value() == 2);
  CHECK((f(2) - f(5)).value() == 4);
  CHECK((f(3) * f(5)).value() == 1);
  CHECK((-f(0)).value() == 0);
}

TEST_CASE("inverse") {
  Field f7(7), f13(13);
  CHECK(inverse(f7(1)) == 1);
  CHECK(inverse(f7(2)) == 4);
  CHECK(inverse(f13(3)) == 9);

  // Brute-force scan oracle.
  for (int p : primes_upto(101)) {
    Field f(p);
    for (int x = 1; x < p; ++x) {
      int scan = 0;
      for (int y = 1; y < p; ++y) {
        if (x * y % p == 1) scan = y;
      }
      CHECK(inverse(f(x)).value() == scan);
      CHECK(f(x) * inverse(f(x)) == 1);
    }
  }
}

TEST_CASE("division by zero") {
  Field f(11);
  CHECK_THROWS_AS(inverse(f(0)), Error);
  CHECK_THROWS_AS(f(3) / f(0), Error);
  CHECK((f(3) / f(4)) * f(4) == 3);
}

TEST_CASE("mixed moduli are rejected") {
  Field a(5), b(7);
  CHECK_THROWS_AS(a(1) + b(1), Error);
  CHECK_THROWS_AS(a(1) * b(1), Error);
}

TEST_CASE("half exponent") {
  CHECK(half_exponent(5) == 3);
  CHECK(half_exponent(7) == 4);
  CHECK(half_exponent(13) == 7);
  for (int p : primes_upto(101)) CHECK(2 * half_exponent(p) % p == 1);
}

TEST_CASE("fermat") {
  for (int p : primes_upto(61)) {
    Field f(p);
    for (int x = 1; x < p; ++x) CHECK(f(x).pow(p - 1) == 1);
  }
}

TEST_CASE("cube roots of unity") {
  CHECK(values(cube_roots_of_unity(Field(5))) == std::vector<int>{1});
  CHECK(values(cube_roots_of_unity(Field(7))) == std::vector<int>{1, 2, 4});
  CHECK(values(cube_roots_of_unity(Field(13))) == std::vector<int>{1, 3, 9});

  for (int p : primes_upto(101)) {
    Field f(p);
    std::vector<int> scan;
    for (int x = 1; x < p; ++x) {
      if (x * x % p * x % p == 1) scan.push_back(x);
    }
    auto got = values(cube_roots_of_unity(f));
    std::sort(got.begin(), got.end());
    CHECK(got == scan);
    CHECK((got.size() == 3) == (p % 3 == 1));
  }
}

TEST_CASE("primitive cube root") {
  CHECK(primitive_cube_root(Field(7)).value() == 2);
  CHECK_THROWS_AS(primitive_cube_root(Field(11)), Error);
  for (int p : {7, 13, 19, 31, 37, 43}) {
    const auto a = primitive_cube_root(Field(p));
    CHECK(a.pow(3) == 1);
    CHECK(a != Field(p).one());
  }
}

TEST_CASE("cubic residue cosets") {
  using Cosets = std::vector<std::vector<int>>;
  auto as_ints = [](const std::vector<std::vector<FieldScalar>>& cs) {
    Cosets out;
    for (const auto& c : cs) out.push_back(values(c));
    return out;
  };
  CHECK(as_ints(cubic_residue_cosets(Field(7))) == Cosets{{1, 6}, {2, 5}, {3, 4}});
  CHECK(as_ints(cubic_residue_cosets(Field(5))) == Cosets{{1, 2, 3, 4}});
  CHECK(as_ints(cubic_residue_cosets(Field(13))).front() == std::vector<int>{1, 5, 8, 12});

  for (int p : primes_upto(101)) {
    Field f(p);
    const auto cosets = as_ints(cubic_residue_cosets(f));
    CHECK(cosets.size() == (p % 3 == 1 ? 3u : 1u));
    std::set<int> residues;
    for (int y = 1; y < p; ++y) residues.insert(y * y % p * y % p);
    CHECK(std::set<int>(cosets[0].begin(), cosets[0].end()) == residues);

    std::set<int> seen;
    for (const auto& c : cosets) {
      CHECK(c.size() == cosets[0].size());
      for (int x : c) {
        CHECK(seen.insert(x).second);
        CHECK(coset_index(f(x)) == &c - cosets.data());
      }
    }
    CHECK(seen.size() == static_cast<std::size_t>(p - 1));
  }
  CHECK_THROWS_AS(coset_index(Field(7).zero()), Error);
}
