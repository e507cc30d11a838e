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

#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "zkit/field.hpp"

namespace zkit {

/// A point of the phase space Z_p^2, used to label displacement operators.
struct PhasePoint {
  FieldScalar first;
  FieldScalar second;

  friend PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
    return {a.first + b.first, a.second + b.second};
  }
  friend PhasePoint operator-(const PhasePoint& a) { return {-a.first, -a.second}; }
  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Symplectic form <a, b> = a2 b1 - a1 b2 of the phase-space composition rule.
FieldScalar symplectic_form(const PhasePoint& a, const PhasePoint& b);

/// All p^2 phase points in row-major (first, second) order.
std::vector<PhasePoint> all_phase_points(const Field& field);

/// An element of SL(2, Z_p), stored as ((alpha, beta), (gamma, delta)).
class SymplecticMatrix {
 public:
  /// Throws InvalidArgument unless alpha*delta - beta*gamma = 1.
  SymplecticMatrix(FieldScalar alpha, FieldScalar beta, FieldScalar gamma, FieldScalar delta);
  SymplecticMatrix(const Field& field, int alpha, int beta, int gamma, int delta);

  static SymplecticMatrix identity(const Field& field) { return {field, 1, 0, 0, 1}; }
  /// The shear z -> z + 1.
  static SymplecticMatrix shear(const Field& field) { return {field, 1, 1, 0, 1}; }
  /// The quarter turn ((0, -1), (1, 0)).
  static SymplecticMatrix fourier(const Field& field) { return {field, 0, -1, 1, 0}; }
  static SymplecticMatrix diagonal(const FieldScalar& a) { return {a, a.field().zero(), a.field().zero(), zkit::inverse(a)}; }

  const FieldScalar& alpha() const noexcept { return a_; }
  const FieldScalar& beta() const noexcept { return b_; }
  const FieldScalar& gamma() const noexcept { return c_; }
  const FieldScalar& delta() const noexcept { return d_; }
  int modulus() const noexcept { return a_.modulus(); }
  Field field() const { return a_.field(); }

  FieldScalar trace() const { return a_ + d_; }
  bool is_identity() const { return a_ == 1 && b_.is_zero() && c_.is_zero() && d_ == 1; }
  bool is_diagonal() const { return b_.is_zero() && c_.is_zero(); }
  std::array<int, 4> entries() const { return {a_.value(), b_.value(), c_.value(), d_.value()}; }

  SymplecticMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  PhasePoint operator*(const PhasePoint& v) const {
    return {a_ * v.first + b_ * v.second, c_ * v.first + d_ * v.second};
  }

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;
  friend auto operator<=>(const SymplecticMatrix&, const SymplecticMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SymplecticMatrix& g);

 private:
  FieldScalar a_, b_, c_, d_;
};

/// Matrix product mod p; throws ModulusMismatch for mixed moduli.
SymplecticMatrix compose(const SymplecticMatrix& g, const SymplecticMatrix& h);
inline SymplecticMatrix operator*(const SymplecticMatrix& g, const SymplecticMatrix& h) { return compose(g, h); }

SymplecticMatrix power(const SymplecticMatrix& g, int n);

/// Smallest n >= 1 with g^n = I.
int order(const SymplecticMatrix& g);

/// A label on the projective line Z_p u {infinity}.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const FieldScalar& z) : p_(z.modulus()), z_(z.value()) {}
  static ProjectivePoint infinity(const Field& field) { return ProjectivePoint(field.modulus()); }

  bool is_infinity() const noexcept { return !z_.has_value(); }
  /// The finite label; only valid when !is_infinity().
  int value() const { return *z_; }
  /// Position in 0..p with infinity last.
  int index() const noexcept { return z_ ? *z_ : p_; }
  int modulus() const noexcept { return p_; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ProjectivePoint& z);

 private:
  explicit ProjectivePoint(int p) : p_(p) {}
  int p_;
  std::optional<int> z_;
};

/// The p + 1 points ordered 0, 1, ..., p-1, infinity.
std::vector<ProjectivePoint> projective_line(const Field& field);

/// z -> (alpha z + beta) / (gamma z + delta).
ProjectivePoint mobius_apply(const SymplecticMatrix& g, const ProjectivePoint& z);

std::vector<ProjectivePoint> fixed_points(const SymplecticMatrix& g);

enum class MobiusClass { Identity, Hyperbolic, Parabolic, Elliptic };

const char* to_string(MobiusClass c);

/// Classification by the number of fixed points on the projective line;
/// +I and -I act trivially and are reported as Identity.
MobiusClass classify_mobius(const SymplecticMatrix& g);

/// Every element of SL(2, Z_p), p(p^2 - 1) of them, in lexicographic order.
std::vector<SymplecticMatrix> enumerate_sl2(const Field& field);

/// Every element of order three, i.e. with trace -1.
std::vector<SymplecticMatrix> enumerate_order3(const Field& field);

struct Diagonalization {
  SymplecticMatrix conjugator;  // H
  SymplecticMatrix diagonal;    // H G H^-1
};

/// For p = 1 mod 3 and g of order three, finds H with H g H^-1 = diag(a, a^2).
/// Already-diagonal inputs return H = I; otherwise a is primitive_cube_root.
/// Throws NotDiagonalizable for p = 2 mod 3, InvalidArgument if order(g) != 3.
Diagonalization diagonalize_order3(const SymplecticMatrix& g);

}  // namespace zkit
