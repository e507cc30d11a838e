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

#include <filesystem>
#include <string>
#include <vector>

#include "zkit/ray.hpp"
#include "zkit/zauner.hpp"

namespace zkit {

/// A candidate SIC fiducial read from an external file. No fiducial values
/// ship with the library.
struct Fiducial {
  Ray ray;
  std::string label;

  int dim() const { return ray.dim(); }
};

/// Reads the shared state format. The optional "label" string is kept as the
/// provenance label. Throws ParseError, DimensionMismatch when dim != p, and
/// NonUnitNorm when the norm is off by more than 1e-6.
Fiducial load_fiducial(const std::filesystem::path& path, int p);
Fiducial make_fiducial(const StateVector& psi, int p, std::string label = {});

struct SicReport {
  bool pass = false;
  double max_deviation = 0.0;  // max over distinct translate pairs of | |<i|j>|^2 - 1/(p+1) |
};

/// Checks all p^2 Weyl-Heisenberg translates D_r |psi> pairwise.
SicReport verify_sic(const Fiducial& psi, double tol = 1e-6);

/// Indices into `subspaces` of the Zauner subspaces containing psi.
std::vector<std::size_t> fiducial_zauner_check(const Fiducial& psi, const std::vector<ZaunerSubspace>& subspaces,
                                               double tol = kMembershipTolerance);
/// As above against enumerate_zauner_subspaces; throws WrongResidueClass for p = 2 mod 3.
std::vector<std::size_t> fiducial_zauner_check(const Fiducial& psi, double tol = kMembershipTolerance);

double sic_mana(const Fiducial& psi);

}  // namespace zkit
