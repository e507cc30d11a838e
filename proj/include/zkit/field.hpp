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

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "zkit/error.hpp"

namespace zkit {

bool is_prime(std::int64_t n);

class FieldScalar;

// A validated odd prime modulus p > 3. Every FieldScalar is minted from one of
// these, so primality is checked once per modulus rather than per element.
class Field {
 public:
  explicit Field(int p);

  int modulus() const noexcept { return p_; }
  int size() const noexcept { return p_; }

  FieldScalar operator()(std::int64_t v) const;
  FieldScalar zero() const;
  FieldScalar one() const;

  // p mod 3, which is 1 or 2 for every admissible modulus.
  int residue_mod3() const noexcept { return p_ % 3; }
  bool is_one_mod_three() const noexcept { return p_ % 3 == 1; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  int p_;
};

class FieldScalar {
 public:
  FieldScalar(const Field& field, std::int64_t v) : value_(reduce(v, field.modulus())), p_(field.modulus()) {}

  int value() const noexcept { return value_; }
  int modulus() const noexcept { return p_; }
  Field field() const { return Field(p_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldScalar operator-() const { return make(-static_cast<std::int64_t>(value_)); }
  FieldScalar& operator+=(const FieldScalar& o) { check(o); value_ = reduce(std::int64_t{value_} + o.value_, p_); return *this; }
  FieldScalar& operator-=(const FieldScalar& o) { check(o); value_ = reduce(std::int64_t{value_} - o.value_, p_); return *this; }
  FieldScalar& operator*=(const FieldScalar& o) { check(o); value_ = reduce(std::int64_t{value_} * o.value_, p_); return *this; }
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  friend FieldScalar operator+(FieldScalar a, std::int64_t b) { return a += a.make(b); }
  friend FieldScalar operator-(FieldScalar a, std::int64_t b) { return a -= a.make(b); }
  friend FieldScalar operator*(FieldScalar a, std::int64_t b) { return a *= a.make(b); }
  friend FieldScalar operator*(std::int64_t b, FieldScalar a) { return a *= a.make(b); }

  friend bool operator==(const FieldScalar&, const FieldScalar&) = default;
  friend auto operator<=>(const FieldScalar&, const FieldScalar&) = default;
  friend bool operator==(const FieldScalar& a, std::int64_t b) { return a.value_ == reduce(b, a.p_); }

  FieldScalar pow(std::int64_t e) const;

  friend std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.value_; }

 private:
  friend class Field;
  FieldScalar(int v, int p, std::nullptr_t) : value_(v), p_(p) {}

  static int reduce(std::int64_t v, int p) {
    auto r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
  }
  FieldScalar make(std::int64_t v) const { return {reduce(v, p_), p_, nullptr}; }
  void check(const FieldScalar& o) const {
    if (o.p_ != p_) throw Error(ErrorCode::ModulusMismatch, "operands live in different fields");
  }

  int value_;
  int p_;
};

/// Multiplicative inverse by the extended Euclidean algorithm.
FieldScalar inverse(const FieldScalar& x);

/// (p+1)/2, i.e. the inverse of 2 mod p. Half-integer phase exponents such as
/// omega^{a/2} are evaluated as omega^{a * half_exponent(p)}.
int half_exponent(int p);

/// All solutions of a^3 = 1, sorted by value.
std::vector<FieldScalar> cube_roots_of_unity(const Field& field);

/// Smallest cube root of unity other than 1; throws WrongResidueClass when
/// p = 2 mod 3 because none exists.
FieldScalar primitive_cube_root(const Field& field);

/// The cosets of the cubic-residue subgroup in the multiplicative group. For
/// p = 1 mod 3 there are three, the residue subgroup first and the other two
/// ordered by their smallest element; each coset is sorted. For p = 2 mod 3
/// every nonzero element is a cube and a single coset is returned.
std::vector<std::vector<FieldScalar>> cubic_residue_cosets(const Field& field);

/// Index into cubic_residue_cosets(field) of the coset containing x != 0.
int coset_index(const FieldScalar& x);

}  // namespace zkit
