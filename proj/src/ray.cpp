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

#include "zkit/ray.hpp"

#include <cmath>

#include "zkit/error.hpp"

namespace zkit {

namespace {

constexpr double kSignificant = 1e-6;

// Fixed irrational-ish weights so distinct rays rarely share a fingerprint.
double weight(Eigen::Index i, int component) {
  const double t = static_cast<double>(2 * i + component + 1);
  return 1.0 + std::fmod(t * 0.6180339887498949, 1.0);
}

}  // namespace

Ray::Ray(const StateVector& v) : amps_(v) {
  const double norm = amps_.norm();
  if (!(norm > 1e-12)) throw Error(ErrorCode::NonUnitNorm, "cannot form a ray from a zero vector");
  amps_ /= norm;
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    if (std::abs(amps_(i)) > kSignificant) {
      amps_ *= std::conj(amps_(i)) / std::abs(amps_(i));
      amps_(i) = std::abs(amps_(i));
      break;
    }
  }
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    fingerprint_ += weight(i, 0) * amps_(i).real() + weight(i, 1) * amps_(i).imag();
  }
}

double Ray::overlap_squared(const Ray& other) const {
  if (other.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "rays of different dimension");
  return std::norm(amps_.dot(other.amps_));
}

std::optional<std::size_t> RaySet::find(const Ray& ray) const {
  const double f = ray.fingerprint();
  for (auto it = index_.lower_bound(f - window_); it != index_.end() && it->first <= f + window_; ++it) {
    if (rays_[it->second].same_ray(ray, tol_)) return it->second;
  }
  return std::nullopt;
}

std::pair<std::size_t, bool> RaySet::insert(const Ray& ray) {
  if (auto found = find(ray)) return {*found, false};
  rays_.push_back(ray);
  index_.emplace(ray.fingerprint(), rays_.size() - 1);
  return {rays_.size() - 1, true};
}

void RaySet::merge(const RaySet& other) {
  for (const auto& ray : other) insert(ray);
}

}  // namespace zkit
