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

#include <cstddef>
#include <string>
#include <vector>

#include "zkit/mub.hpp"

namespace zkit {

/// Membership tolerance for ||P psi - psi||; looser than construction
/// tolerance to absorb error accumulated in D_q U_G products.
inline constexpr double kMembershipTolerance = 1e-7;

/// The eigenvalue-one eigenspace of an order-three Clifford unitary.
struct ZaunerSubspace {
  Operator projector;
  CliffordElement source;
  int rank = 0;

  int dim() const { return static_cast<int>(projector.rows()); }
};

/// U_Z for Z = diag(a, a^2) with a = primitive_cube_root(p), phase-fixed to
/// order three. Throws WrongResidueClass for p = 2 mod 3.
Operator representative_zauner(const Field& field);

/// P = (I + U + U^2) / 3 for the cube-root-of-unity branch of U whose
/// eigenvalue-one space has dimension (p - 1) / 3 + 1. Throws NotOrderThree
/// unless U^3 = I with U not scalar, and WrongResidueClass for p = 2 mod 3.
ZaunerSubspace zauner_projector(const Operator& u, const CliffordElement& source, double tol = kTolerance);
ZaunerSubspace zauner_projector(const Operator& u, double tol = kTolerance);

/// One subspace per pair {C, C^2} of order-three Clifford elements D_q U_G,
/// deduplicated by projector equality; p^3 (p + 1) / 2 of them.
std::vector<ZaunerSubspace> enumerate_zauner_subspaces(const Field& field);

/// ||P psi - psi||.
double membership_residual(const ZaunerSubspace& s, const Ray& psi);
bool subspace_contains(const ZaunerSubspace& s, const Ray& psi, double tol = kMembershipTolerance);

struct IncidenceViolation {
  std::string kind;  // "point" or "line"
  std::size_t index = 0;
  int count = 0;
  int expected = 0;
};

/// Incidence between points (rays) and lines (subspaces) written (m|gamma, n|pi):
/// m points each on gamma lines, n lines each containing pi points.
struct IncidenceReport {
  int m = 0;
  int gamma = 0;
  int n = 0;
  int pi = 0;
  bool ok = false;
  std::size_t ambiguous = 0;  // residuals in (1e-10, 1e-4): neither clearly in nor clearly out
  std::vector<std::vector<int>> per_point;
  std::vector<std::vector<int>> per_line;
  std::vector<IncidenceViolation> violations;
};

/// Computes every point/line incidence. ok is true iff incidence counts are
/// uniform in both directions; otherwise gamma/pi hold the majority count and
/// every offending point or line is listed in violations.
IncidenceReport compute_incidence(const std::vector<Ray>& points, const std::vector<ZaunerSubspace>& lines,
                                  double tol = kMembershipTolerance);

/// As compute_incidence but throws NotAConfiguration naming the first violation.
IncidenceReport verify_configuration(const std::vector<Ray>& points, const std::vector<ZaunerSubspace>& lines,
                                     double tol = kMembershipTolerance);

struct OrbitDecomposition {
  RaySet rays;                                 // all Alltop rays
  std::vector<std::vector<std::size_t>> orbits;  // indices into rays
  std::vector<std::vector<int>> x_labels;      // exponents x whose M^x |I_0^(1)> lies in each orbit
  bool labels_consistent = false;              // every M^x |I_a^(z)>, z finite nonzero, agrees with its x label
  bool coset_rule_holds = false;               // U_G M^x U_G^-1 = M^(x/alpha^3) for every lower-triangular G
  bool matches_cosets = false;                 // x-label partition equals the cubic-residue coset partition
};

/// Breadth-first closure of the Alltop rays under U_T, U_F, D_(1,0), D_(0,1).
/// Orbits are ordered by the coset index of their x labels. Throws
/// ClosureViolation if a generator maps an Alltop ray outside the set.
OrbitDecomposition clifford_orbits_of_alltop(const Field& field);

}  // namespace zkit
