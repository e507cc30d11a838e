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

#include "zkit/mub.hpp"

#include <cmath>

namespace zkit {

std::vector<Ray> MubFamily::rays() const {
  std::vector<Ray> out;
  for (const auto& basis : bases) {
    for (Eigen::Index a = 0; a < basis.cols(); ++a) out.emplace_back(basis.col(a));
  }
  return out;
}

MubFamily ivanovic_mub(const Field& field) {
  const int p = field.modulus();
  MubFamily mub{"ivanovic", 0, CliffordElement::identity(field), {}, {}};
  const Operator shear = symplectic_unitary(SymplecticMatrix::shear(field));
  Operator basis = Operator::Identity(p, p);
  for (int z = 0; z < p; ++z) {
    mub.labels.emplace_back(field(z));
    mub.bases.push_back(basis);
    basis = shear * basis;
  }
  mub.labels.push_back(ProjectivePoint::infinity(field));
  mub.bases.push_back(symplectic_unitary(SymplecticMatrix::fourier(field)));
  return mub;
}

CliffordElement fourier_conjugator(const Field& field) {
  return {field.zero(), {field.zero(), field.zero()}, SymplecticMatrix::fourier(field)};
}

MubFamily alltop_mub(const Field& field, const FieldScalar& x, const CliffordElement& conjugator) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroExponent, "Alltop families need x != 0");
  MubFamily mub = ivanovic_mub(field);
  const Operator c = conjugator.realize();
  const Operator gate = c * magic_power(field, x.value()) * c.adjoint();
  for (auto& basis : mub.bases) basis = gate * basis;
  mub.family = "alltop";
  mub.x = x.value();
  mub.conjugator = conjugator;
  return mub;
}

bool is_unbiased(const Operator& a, const Operator& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "bases of different dimension");
  }
  const double target = 1.0 / static_cast<double>(a.rows());
  return ((a.adjoint() * b).cwiseAbs2().array() - target).abs().maxCoeff() <= tol;
}

double mub_deviation(const MubFamily& mub) {
  double worst = 0.0;
  const double target = 1.0 / mub.dim();
  for (std::size_t i = 0; i < mub.bases.size(); ++i) {
    const Operator gram = mub.bases[i].adjoint() * mub.bases[i];
    worst = std::max(worst, max_abs(gram - Operator::Identity(gram.rows(), gram.cols())));
    for (std::size_t j = i + 1; j < mub.bases.size(); ++j) {
      worst = std::max(worst, ((mub.bases[i].adjoint() * mub.bases[j]).cwiseAbs2().array() - target).abs().maxCoeff());
    }
  }
  return worst;
}

int matching_basis(const MubFamily& mub, const Operator& basis, double tol) {
  for (std::size_t i = 0; i < mub.bases.size(); ++i) {
    // Two orthonormal bases span the same rays iff |<a_i|b_j>|^2 is a permutation matrix.
    const Eigen::MatrixXd overlaps = (mub.bases[i].adjoint() * basis).cwiseAbs2();
    bool same = true;
    for (Eigen::Index j = 0; j < overlaps.cols() && same; ++j) same = overlaps.col(j).maxCoeff() >= 1.0 - tol;
    if (same) return static_cast<int>(i);
  }
  return -1;
}

RaySet ivanovic_rays(const Field& field) {
  RaySet set;
  for (const auto& ray : ivanovic_mub(field).rays()) set.insert(ray);
  return set;
}

AlltopEnumeration enumerate_alltop(const Field& field) {
  const int p = field.modulus();
  const MubFamily ivanovic = ivanovic_mub(field);
  const RaySet stabilizer_rays = ivanovic_rays(field);
  Operator all_vectors(p, p * (p + 1));
  for (std::size_t b = 0; b < ivanovic.bases.size(); ++b) all_vectors.middleCols(b * p, p) = ivanovic.bases[b];

  std::vector<Operator> magic_powers;
  for (int x = 1; x < p; ++x) magic_powers.push_back(magic_power(field, x));

  AlltopEnumeration result;
  for (const auto& h : enumerate_sl2(field)) {
    const Operator u = symplectic_unitary(h);
    const Operator u_dag = u.adjoint();
    const CliffordElement conjugator{field.zero(), {field.zero(), field.zero()}, h};
    for (int x = 1; x < p; ++x) {
      const Operator gate = u * magic_powers[x - 1] * u_dag;
      // Distinct Alltop families share no Alltop basis, so one known Alltop
      // ray marks the whole family as seen. A family skipped wrongly would
      // surface as a closure violation in the orbit sweep.
      bool seen = false;
      for (Eigen::Index b = 0; b <= p; ++b) {
        const Ray probe(gate * all_vectors.col(b * p));
        if (stabilizer_rays.contains(probe)) continue;
        seen = result.rays.contains(probe);
        break;
      }
      if (seen) continue;
      const Operator images = gate * all_vectors;
      bool contributed = false;
      for (Eigen::Index c = 0; c < images.cols(); ++c) {
        const Ray ray(images.col(c));
        if (stabilizer_rays.contains(ray)) continue;
        contributed |= result.rays.insert(ray).second;
      }
      if (contributed) result.transversal.push_back(alltop_mub(field, field(x), conjugator));
    }
  }
  return result;
}

}  // namespace zkit
