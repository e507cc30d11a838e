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

/// A complete set of p + 1 bases. Each basis is a p x p matrix whose columns
/// are the basis vectors, tagged with its projective-line label.
struct MubFamily {
  std::string family;            // "ivanovic" or "alltop"
  int x = 0;                     // exponent of M; 0 for the Ivanovic family
  CliffordElement conjugator;    // C in C M^x C^-1; identity for Ivanovic
  std::vector<ProjectivePoint> labels;
  std::vector<Operator> bases;

  int dim() const { return bases.empty() ? 0 : static_cast<int>(bases.front().rows()); }
  /// Every basis vector of every basis as a ray, basis by basis.
  std::vector<Ray> rays() const;
};

/// Label 0 is the computational basis, label z the image under (U_T)^z and
/// label infinity the image under U_F.
MubFamily ivanovic_mub(const Field& field);

/// Applies C M^x C^-1 to every Ivanovic vector. The identity conjugator gives
/// M^x |I_a^(z)>, the Fourier conjugator U_F M^x U_F^-1 |I_a^(z)>.
/// Throws ZeroExponent for x = 0.
MubFamily alltop_mub(const Field& field, const FieldScalar& x, const CliffordElement& conjugator);

/// The Clifford element realizing U_F.
CliffordElement fourier_conjugator(const Field& field);

/// True iff every cross overlap |<a_i|b_j>|^2 is within tol of 1/dim.
/// Throws DimensionMismatch when the bases differ in size.
bool is_unbiased(const Operator& a, const Operator& b, double tol = kTolerance);

/// Largest deviation of any cross-basis overlap from 1/p and of any in-basis
/// Gram entry from the identity; 0 for an exact complete MUB.
double mub_deviation(const MubFamily& mub);

/// Index of the basis in `mub` that coincides with `basis` up to phases and
/// ordering of its vectors, or -1.
int matching_basis(const MubFamily& mub, const Operator& basis, double tol = 1e-8);

RaySet ivanovic_rays(const Field& field);

struct AlltopEnumeration {
  RaySet rays;                                   // Alltop vectors only
  std::vector<MubFamily> transversal;            // one family per distinct Alltop MUB contributor
};

/// Sweeps conjugators U_H, H in SL(2, Z_p), and exponents x = 1..p-1, keeping
/// each family that contributes rays not seen before. The ray set is the
/// union minus the Ivanovic rays and has p^2 (p + 1)(p - 1) elements.
AlltopEnumeration enumerate_alltop(const Field& field);
inline RaySet enumerate_alltop_vectors(const Field& field) { return enumerate_alltop(field).rays; }

}  // namespace zkit
