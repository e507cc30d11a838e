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

#include "zkit/field.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

namespace zkit {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(int p) : p_(p) {
  if (p <= 3 || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "modulus must be a prime > 3, got " + std::to_string(p));
  }
}

FieldScalar Field::operator()(std::int64_t v) const { return FieldScalar(*this, v); }
FieldScalar Field::zero() const { return FieldScalar(*this, 0); }
FieldScalar Field::one() const { return FieldScalar(*this, 1); }

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  check(o);
  return *this *= inverse(o);
}

FieldScalar FieldScalar::pow(std::int64_t e) const {
  FieldScalar base = e < 0 ? inverse(*this) : *this;
  if (e < 0) e = -e;
  FieldScalar acc = make(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

FieldScalar inverse(const FieldScalar& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero has no inverse mod " + std::to_string(x.modulus()));
  std::int64_t r0 = x.modulus(), r1 = x.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return x.field()(t0);
}

int half_exponent(int p) { return (p + 1) / 2; }

std::vector<FieldScalar> cube_roots_of_unity(const Field& field) {
  std::vector<FieldScalar> roots;
  for (int a = 1; a < field.modulus(); ++a) {
    if (field(a).pow(3) == 1) roots.push_back(field(a));
  }
  return roots;
}

FieldScalar primitive_cube_root(const Field& field) {
  for (const auto& a : cube_roots_of_unity(field)) {
    if (a != field.one()) return a;
  }
  throw Error(ErrorCode::WrongResidueClass,
              "p = " + std::to_string(field.modulus()) + " is 2 mod 3; no nontrivial cube root of unity");
}

std::vector<std::vector<FieldScalar>> cubic_residue_cosets(const Field& field) {
  const int p = field.modulus();
  std::vector<FieldScalar> residues;
  for (int y = 1; y < p; ++y) residues.push_back(field(y).pow(3));
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());

  std::vector<std::vector<FieldScalar>> cosets{residues};
  std::vector<bool> seen(p, false);
  for (const auto& r : residues) seen[r.value()] = true;
  for (int g = 1; g < p; ++g) {
    if (seen[g]) continue;
    std::vector<FieldScalar> coset;
    for (const auto& r : residues) {
      coset.push_back(r * field(g));
      seen[coset.back().value()] = true;
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

int coset_index(const FieldScalar& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero lies in no multiplicative coset");
  const int p = x.modulus();
  if (p % 3 == 2) return 0;
  const Field field(p);
  const auto cosets = cubic_residue_cosets(field);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), x)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace zkit
