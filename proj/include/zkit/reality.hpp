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

#include <string>
#include <vector>

#include "zkit/ray.hpp"
#include "zkit/representation.hpp"

namespace zkit {

/// U K, where K is complex conjugation in the computational basis. With
/// conjugates = false this is just the unitary U. Never expanded to a
/// real-doubled matrix.
struct AntiUnitary {
  Operator unitary;
  bool conjugates = true;

  StateVector apply(const StateVector& psi) const {
    return conjugates ? StateVector(unitary * psi.conjugate()) : StateVector(unitary * psi);
  }
};

/// (U1 K^a)(U2 K^b) = U1 K^a(U2) K^(a xor b), with K(U) = conj(U).
AntiUnitary compose(const AntiUnitary& a, const AntiUnitary& b);

/// Applies T and returns the canonical image ray. Throws DimensionMismatch.
Ray apply_antiunitary(const AntiUnitary& t, const Ray& psi);

/// True iff every canonical amplitude has imaginary part below tol.
bool is_manifestly_real(const Ray& psi, double tol = kTolerance);

/// ||T psi - psi|| in canonical form; zero iff psi spans a T-invariant ray.
double antiunitary_residual(const AntiUnitary& t, const Ray& psi);

struct RealityCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

struct RealityReport {
  int p = 0;
  std::vector<RealityCheck> checks;
  int uak_family_distinct = 0;       // distinct rays among M^x |I_0^(inf)>, x = 1..p-1
  int real_family_distinct = 0;      // distinct rays among U_F M^x U_F^-1 |I_0^(0)>
  // Filled for p = 1 mod 3: Alltop rays inside the representative Zauner subspace.
  int zauner_alltop = 0;
  int zauner_manifestly_real = 0;    // invariant under K
  int zauner_uak_only = 0;           // invariant under U_A K but not manifestly real
  int zauner_neither = 0;
  bool passed() const;
};

/// Verifies that M commutes with U_A K, that the two x-indexed Alltop
/// families are invariant under U_A K and K respectively with p - 1 distinct
/// members each, and for p = 1 mod 3 that the 2(p - 1) Alltop rays in the
/// representative Zauner subspace split evenly between the two real subspaces.
RealityReport check_real_structure(const Field& field, double tol = kTolerance);

}  // namespace zkit
