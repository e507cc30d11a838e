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

#include "zkit/symplectic.hpp"

#include <algorithm>
#include <string>

namespace zkit {

FieldScalar symplectic_form(const PhasePoint& a, const PhasePoint& b) {
  return a.second * b.first - a.first * b.second;
}

std::vector<PhasePoint> all_phase_points(const Field& field) {
  std::vector<PhasePoint> points;
  points.reserve(static_cast<std::size_t>(field.modulus()) * field.modulus());
  for (int a = 0; a < field.modulus(); ++a) {
    for (int b = 0; b < field.modulus(); ++b) points.push_back({field(a), field(b)});
  }
  return points;
}

SymplecticMatrix::SymplecticMatrix(FieldScalar alpha, FieldScalar beta, FieldScalar gamma, FieldScalar delta)
    : a_(alpha), b_(beta), c_(gamma), d_(delta) {
  if (a_ * d_ - b_ * c_ != a_.field().one()) {
    throw Error(ErrorCode::InvalidArgument, "determinant is not 1 mod " + std::to_string(a_.modulus()));
  }
}

SymplecticMatrix::SymplecticMatrix(const Field& field, int alpha, int beta, int gamma, int delta)
    : SymplecticMatrix(field(alpha), field(beta), field(gamma), field(delta)) {}

std::ostream& operator<<(std::ostream& os, const SymplecticMatrix& g) {
  return os << "((" << g.a_ << "," << g.b_ << "),(" << g.c_ << "," << g.d_ << "))";
}

SymplecticMatrix compose(const SymplecticMatrix& g, const SymplecticMatrix& h) {
  if (g.modulus() != h.modulus()) throw Error(ErrorCode::ModulusMismatch, "composing matrices over different fields");
  return {g.alpha() * h.alpha() + g.beta() * h.gamma(), g.alpha() * h.beta() + g.beta() * h.delta(),
          g.gamma() * h.alpha() + g.delta() * h.gamma(), g.gamma() * h.beta() + g.delta() * h.delta()};
}

SymplecticMatrix power(const SymplecticMatrix& g, int n) {
  SymplecticMatrix base = n < 0 ? g.inverse() : g;
  if (n < 0) n = -n;
  auto acc = SymplecticMatrix::identity(g.field());
  for (; n > 0; n >>= 1) {
    if (n & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

int order(const SymplecticMatrix& g) {
  int n = 1;
  for (auto acc = g; !acc.is_identity(); acc = acc * g) ++n;
  return n;
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& z) {
  if (z.is_infinity()) return os << "inf";
  return os << z.value();
}

std::vector<ProjectivePoint> projective_line(const Field& field) {
  std::vector<ProjectivePoint> line;
  for (int z = 0; z < field.modulus(); ++z) line.emplace_back(field(z));
  line.push_back(ProjectivePoint::infinity(field));
  return line;
}

ProjectivePoint mobius_apply(const SymplecticMatrix& g, const ProjectivePoint& z) {
  const Field field = g.field();
  if (z.modulus() != g.modulus()) throw Error(ErrorCode::ModulusMismatch, "label and matrix over different fields");
  if (z.is_infinity()) {
    if (g.gamma().is_zero()) return ProjectivePoint::infinity(field);
    return ProjectivePoint(g.alpha() / g.gamma());
  }
  const FieldScalar x = field(z.value());
  const FieldScalar den = g.gamma() * x + g.delta();
  if (den.is_zero()) return ProjectivePoint::infinity(field);
  return ProjectivePoint((g.alpha() * x + g.beta()) / den);
}

std::vector<ProjectivePoint> fixed_points(const SymplecticMatrix& g) {
  std::vector<ProjectivePoint> fixed;
  for (const auto& z : projective_line(g.field())) {
    if (mobius_apply(g, z) == z) fixed.push_back(z);
  }
  return fixed;
}

const char* to_string(MobiusClass c) {
  switch (c) {
    case MobiusClass::Identity: return "identity";
    case MobiusClass::Hyperbolic: return "hyperbolic";
    case MobiusClass::Parabolic: return "parabolic";
    case MobiusClass::Elliptic: return "elliptic";
  }
  return "unknown";
}

MobiusClass classify_mobius(const SymplecticMatrix& g) {
  if (g.is_diagonal() && g.alpha() == g.delta()) return MobiusClass::Identity;
  switch (fixed_points(g).size()) {
    case 0: return MobiusClass::Elliptic;
    case 1: return MobiusClass::Parabolic;
    case 2: return MobiusClass::Hyperbolic;
    default: return MobiusClass::Identity;
  }
}

std::vector<SymplecticMatrix> enumerate_sl2(const Field& field) {
  const int p = field.modulus();
  std::vector<SymplecticMatrix> group;
  group.reserve(static_cast<std::size_t>(p) * (p * p - 1));
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        // ad - bc = 1 fixes d when a != 0; otherwise bc = -1 and d is free.
        if (a != 0) {
          const FieldScalar d = (field.one() + field(b) * field(c)) / field(a);
          group.emplace_back(field(a), field(b), field(c), d);
        } else if (field(b) * field(c) == -1) {
          for (int d = 0; d < p; ++d) group.emplace_back(field(a), field(b), field(c), field(d));
        }
      }
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

std::vector<SymplecticMatrix> enumerate_order3(const Field& field) {
  const int p = field.modulus();
  std::vector<SymplecticMatrix> result;
  for (int a = 0; a < p; ++a) {
    const FieldScalar alpha = field(a);
    const FieldScalar delta = -field.one() - alpha;
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        if (alpha * delta - field(b) * field(c) == 1) result.emplace_back(alpha, field(b), field(c), delta);
      }
    }
  }
  return result;
}

namespace {

// A nonzero solution v of (g - lambda I) v = 0; g is not diagonal.
PhasePoint eigenvector(const SymplecticMatrix& g, const FieldScalar& lambda) {
  if (!g.beta().is_zero()) return {g.beta(), lambda - g.alpha()};
  return {lambda - g.delta(), g.gamma()};
}

}  // namespace

Diagonalization diagonalize_order3(const SymplecticMatrix& g) {
  const Field field = g.field();
  if (!field.is_one_mod_three()) {
    throw Error(ErrorCode::NotDiagonalizable,
                "order-3 elements are elliptic for p = " + std::to_string(field.modulus()) + " = 2 mod 3");
  }
  if (order(g) != 3) throw Error(ErrorCode::InvalidArgument, "expected an element of order 3");
  if (g.is_diagonal()) return {SymplecticMatrix::identity(field), g};

  const FieldScalar a = primitive_cube_root(field);
  const PhasePoint v1 = eigenvector(g, a);
  const PhasePoint v2 = eigenvector(g, a * a);
  // Columns (v1, v2) form H^-1; rescale v1 so that the determinant is one.
  const FieldScalar det = v1.first * v2.second - v2.first * v1.second;
  const FieldScalar s = inverse(det);
  const SymplecticMatrix h_inv(v1.first * s, v2.first, v1.second * s, v2.second);
  const SymplecticMatrix h = h_inv.inverse();
  return {h, h * g * h_inv};
}

}  // namespace zkit
