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

#include "zkit/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zkit {

Operator shift_operator(int p) {
  Operator x = Operator::Zero(p, p);
  for (int r = 0; r < p; ++r) x((r + 1) % p, r) = 1.0;
  return x;
}

Operator clock_operator(int p) {
  Operator z = Operator::Zero(p, p);
  for (int r = 0; r < p; ++r) z(r, r) = omega_power(p, r);
  return z;
}

Operator displacement(const PhasePoint& q) {
  const int p = q.first.modulus();
  const long long q1 = q.first.value(), q2 = q.second.value();
  const long long base = q1 * q2 % p * half_exponent(p);
  Operator d = Operator::Zero(p, p);
  for (int s = 0; s < p; ++s) d((s + q1) % p, s) = omega_power(p, base + q2 * s);
  return d;
}

FieldScalar displacement_product_exponent(const PhasePoint& a, const PhasePoint& b) {
  return symplectic_form(a, b) * half_exponent(a.first.modulus());
}

Operator fix_phase(const Operator& u, int n, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  const auto c = scalar_multiple_of_identity(matrix_power(u, n), tol);
  if (!c || std::abs(std::abs(*c) - 1.0) > tol) {
    throw Error(ErrorCode::NotScalar, "U^" + std::to_string(n) + " is not a unit multiple of the identity");
  }
  const double phi = std::arg(*c);
  for (int j = 0; j < n; ++j) {
    const Operator candidate = std::polar(1.0, -(phi + 2.0 * std::numbers::pi * j) / n) * u;
    if (operator_order(candidate, n, tol) == n) return candidate;
  }
  throw Error(ErrorCode::NotScalar, "no phase gives order exactly " + std::to_string(n));
}

namespace {

Operator raw_symplectic_unitary(const SymplecticMatrix& g) {
  const int p = g.modulus();
  const Field field = g.field();
  Operator u = Operator::Zero(p, p);
  if (!g.beta().is_zero()) {
    const FieldScalar scale = inverse(g.beta()) * half_exponent(p);
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    for (int r = 0; r < p; ++r) {
      for (int s = 0; s < p; ++s) {
        const FieldScalar e = scale * (g.delta() * field(r * r) - field(2 * r * s) + g.alpha() * field(s * s));
        u(r, s) = norm * omega_power(p, e.value());
      }
    }
  } else {
    const FieldScalar scale = g.alpha() * g.gamma() * half_exponent(p);
    for (int s = 0; s < p; ++s) {
      u((g.alpha() * field(s)).value(), s) = omega_power(p, (scale * field(s * s)).value());
    }
  }
  return u;
}

}  // namespace

Operator symplectic_unitary(const SymplecticMatrix& g) { return fix_phase(raw_symplectic_unitary(g), order(g)); }

Operator magic_gate(const Field& field) { return magic_power(field, 1); }

Operator magic_power(const Field& field, int x) {
  const int p = field.modulus();
  Operator m = Operator::Zero(p, p);
  for (int r = 0; r < p; ++r) m(r, r) = omega_power(p, static_cast<long long>(x) * field(r).pow(3).value());
  return m;
}

Operator CliffordElement::realize() const {
  return omega_power(modulus(), phase_exponent.value()) * (zkit::displacement(displacement) * symplectic_unitary(symplectic));
}

CliffordElement compose(const CliffordElement& c1, const CliffordElement& c2) {
  // w^k1 D_q1 U_G1 w^k2 D_q2 U_G2 = w^(k1+k2) D_q1 D_(G1 q2) U_G1 U_G2.
  const PhasePoint moved = c1.symplectic * c2.displacement;
  return {c1.phase_exponent + c2.phase_exponent + displacement_product_exponent(c1.displacement, moved),
          c1.displacement + moved, c1.symplectic * c2.symplectic};
}

std::optional<PhasePoint> match_displacement(const Operator& v, double tol) {
  const auto p = static_cast<int>(v.rows());
  if (v.cols() != p || !is_prime(p) || p <= 3) return std::nullopt;
  const Field field(p);
  Eigen::Index row = 0;
  v.col(0).cwiseAbs().maxCoeff(&row);
  const Complex a0 = v(row, 0);
  const Complex a1 = v((row + 1) % p, 1);
  if (std::abs(a0) < 0.5) return std::nullopt;
  const double turns = std::arg(a1 / a0) * p / (2.0 * std::numbers::pi);
  const PhasePoint q{field(row), field(static_cast<long long>(std::llround(turns)))};
  if (!equal_up_to_phase(v, displacement(q), tol)) return std::nullopt;
  return q;
}

std::optional<CliffordElement> clifford_match(const Operator& u, double tol) {
  const auto p = static_cast<int>(u.rows());
  if (u.cols() != p || !is_prime(p) || p <= 3) return std::nullopt;
  const Field field(p);
  const Operator ud = u.adjoint();
  const auto col1 = match_displacement(u * displacement(field.one(), field.zero()) * ud, tol);
  if (!col1) return std::nullopt;
  const auto col2 = match_displacement(u * displacement(field.zero(), field.one()) * ud, tol);
  if (!col2) return std::nullopt;
  if (col1->first * col2->second - col2->first * col1->second != 1) return std::nullopt;
  const SymplecticMatrix g(col1->first, col2->first, col1->second, col2->second);
  const Operator rest = u * symplectic_unitary(g).adjoint();
  const auto q = match_displacement(rest, tol);
  if (!q) return std::nullopt;
  const auto c = relative_phase(rest, displacement(*q), tol);
  if (!c) return std::nullopt;
  const double turns = std::arg(*c) * p / (2.0 * std::numbers::pi);
  return CliffordElement{field(static_cast<long long>(std::llround(turns))), *q, g};
}

std::optional<int> hierarchy_level(const Operator& u, int max_level, double tol) {
  if (max_level < 1 || max_level > 3) throw Error(ErrorCode::InvalidArgument, "max_level must lie in 1..3");
  if (!is_unitary(u, tol)) throw Error(ErrorCode::NonUnitary, "hierarchy level needs a unitary input");
  if (match_displacement(u, tol)) return 1;
  if (max_level == 1) return std::nullopt;
  if (clifford_match(u, tol)) return 2;
  if (max_level == 2) return std::nullopt;

  const auto p = static_cast<int>(u.rows());
  const Field field(p);
  const Operator ud = u.adjoint();
  int level = 1;
  for (const PhasePoint& gen : {PhasePoint{field.one(), field.zero()}, PhasePoint{field.zero(), field.one()}}) {
    const auto sub = hierarchy_level(u * displacement(gen) * ud, max_level - 1, tol);
    if (!sub) return std::nullopt;
    level = std::max(level, *sub + 1);
  }
  return level;
}

}  // namespace zkit
