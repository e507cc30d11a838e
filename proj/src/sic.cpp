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

#include "zkit/sic.hpp"

#include <cmath>
#include <string>

#include "zkit/io.hpp"
#include "zkit/magic.hpp"

namespace zkit {

Fiducial make_fiducial(const StateVector& psi, int p, std::string label) {
  if (psi.size() != p) {
    throw Error(ErrorCode::DimensionMismatch,
                "fiducial has dimension " + std::to_string(psi.size()) + ", expected " + std::to_string(p));
  }
  if (std::abs(psi.norm() - 1.0) > 1e-6) {
    throw Error(ErrorCode::NonUnitNorm, "fiducial norm " + std::to_string(psi.norm()) + " is not 1");
  }
  return {Ray(psi), std::move(label)};
}

Fiducial load_fiducial(const std::filesystem::path& path, int p) {
  const auto j = io::read_json_file(path);
  const StateVector psi = io::state_from_json(j);
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : path.stem().string();
  return make_fiducial(psi, p, std::move(label));
}

SicReport verify_sic(const Fiducial& psi, double tol) {
  const int p = psi.dim();
  const Field field(p);
  Operator translates(p, p * p);
  Eigen::Index col = 0;
  for (const auto& r : all_phase_points(field)) translates.col(col++) = displacement(r) * psi.ray.amplitudes();
  const Eigen::MatrixXd gram = (translates.adjoint() * translates).cwiseAbs2();
  const double target = 1.0 / (p + 1);
  SicReport report;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j) {
      report.max_deviation = std::max(report.max_deviation, std::abs(gram(i, j) - target));
    }
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

std::vector<std::size_t> fiducial_zauner_check(const Fiducial& psi, const std::vector<ZaunerSubspace>& subspaces,
                                               double tol) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    if (subspace_contains(subspaces[i], psi.ray, tol)) hits.push_back(i);
  }
  return hits;
}

std::vector<std::size_t> fiducial_zauner_check(const Fiducial& psi, double tol) {
  return fiducial_zauner_check(psi, enumerate_zauner_subspaces(Field(psi.dim())), tol);
}

double sic_mana(const Fiducial& psi) { return mana(DensityMatrix::pure(psi.ray)); }

}  // namespace zkit
