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

#include <optional>

#include "zkit/linalg.hpp"
#include "zkit/symplectic.hpp"

namespace zkit {

/// X|r> = |r+1>.
Operator shift_operator(int p);
/// Z|r> = omega^r |r>.
Operator clock_operator(int p);

/// D_q = omega^{q1 q2 / 2} X^{q1} Z^{q2}, with 1/2 read as (p+1)/2 mod p.
Operator displacement(const PhasePoint& q);
inline Operator displacement(const FieldScalar& q1, const FieldScalar& q2) { return displacement(PhasePoint{q1, q2}); }

/// Phase exponent e with D_a D_b = omega^e D_{a+b}.
FieldScalar displacement_product_exponent(const PhasePoint& a, const PhasePoint& b);

/// Rescales u, whose n-th power must be a scalar e^{i phi} I, so that the
/// result has order exactly n. The n candidate roots are tried starting from
/// e^{-i phi/n}, so an input already of order n comes back unchanged.
/// Throws NotScalar if u^n is not proportional to the identity.
Operator fix_phase(const Operator& u, int n, double tol = kTolerance);

/// The metaplectic unitary of g, phase-fixed so that its order equals order(g).
/// With beta != 0 it is the Gauss sum
///   sum_{r,s} omega^{(delta r^2 - 2 r s + alpha s^2)/(2 beta)} |r><s| / sqrt(p),
/// and with beta = 0 the monomial sum_s omega^{alpha gamma s^2 / 2} |alpha s><s|.
/// U_F is the ordinary discrete Fourier matrix and U_{-I} is the parity |r> -> |-r>.
Operator symplectic_unitary(const SymplecticMatrix& g);

/// M = sum_r omega^{r^3} |r><r|.
Operator magic_gate(const Field& field);
/// M^x, built directly from its diagonal.
Operator magic_power(const Field& field, int x);

/// A Clifford group element omega^k D_q U_G held symbolically.
struct CliffordElement {
  FieldScalar phase_exponent;
  PhasePoint displacement;
  SymplecticMatrix symplectic;

  static CliffordElement identity(const Field& field) {
    return {field.zero(), {field.zero(), field.zero()}, SymplecticMatrix::identity(field)};
  }
  int modulus() const noexcept { return phase_exponent.modulus(); }

  /// omega^k D_q U_G with U_G from symplectic_unitary.
  Operator realize() const;

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
};

/// Product c1 c2. The displacement and symplectic parts are exact; the phase
/// exponent tracks the displacement cocycle only, so the realization agrees
/// with c1.realize() * c2.realize() up to a global phase.
CliffordElement compose(const CliffordElement& c1, const CliffordElement& c2);

/// If v is proportional to some D_q, returns q.
std::optional<PhasePoint> match_displacement(const Operator& v, double tol = kTolerance);

/// Lifts a numeric unitary to a CliffordElement: G is read off from the
/// conjugation action on D_(1,0) and D_(0,1), the displacement from
/// u U_G^-1, and k is the nearest p-th root of unity to the leftover phase.
std::optional<CliffordElement> clifford_match(const Operator& u, double tol = kTolerance);

/// Level of u in the Clifford hierarchy (1 = Weyl-Heisenberg, 2 = Clifford,
/// 3 = maps the generators D_(1,0), D_(0,1) into the Clifford group), or
/// nullopt if u lies above max_level. max_level must be in 1..3.
/// Throws NonUnitary for non-unitary input.
std::optional<int> hierarchy_level(const Operator& u, int max_level = 3, double tol = kTolerance);

}  // namespace zkit
