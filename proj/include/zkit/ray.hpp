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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zkit/linalg.hpp"

namespace zkit {

/// A unit vector modulo global phase, stored in canonical form: the first
/// amplitude of modulus above 1e-6 is real and positive.
class Ray {
 public:
  /// Normalizes and canonicalizes; throws NonUnitNorm for a (numerically) zero vector.
  explicit Ray(const StateVector& v);

  const StateVector& amplitudes() const noexcept { return amps_; }
  int dim() const noexcept { return static_cast<int>(amps_.size()); }

  /// |<a|b>|^2.
  double overlap_squared(const Ray& other) const;
  bool same_ray(const Ray& other, double tol = 1e-8) const { return overlap_squared(other) >= 1.0 - tol; }

  /// A real linear functional of the canonical coordinates; equal rays agree
  /// to rounding error, which is what RaySet indexes on.
  double fingerprint() const noexcept { return fingerprint_; }

 private:
  StateVector amps_;
  double fingerprint_ = 0.0;
};

/// Insertion-ordered set of rays. Lookups sort by fingerprint and confirm
/// candidates within a small window by the overlap test, so there is no
/// rounding grid whose cell boundaries could split a ray from its duplicate.
class RaySet {
 public:
  explicit RaySet(double overlap_tol = 1e-8, double window = 1e-7) : tol_(overlap_tol), window_(window) {}

  std::optional<std::size_t> find(const Ray& ray) const;
  bool contains(const Ray& ray) const { return find(ray).has_value(); }
  /// Returns (index, inserted).
  std::pair<std::size_t, bool> insert(const Ray& ray);
  void merge(const RaySet& other);

  std::size_t size() const noexcept { return rays_.size(); }
  bool empty() const noexcept { return rays_.empty(); }
  const Ray& operator[](std::size_t i) const { return rays_[i]; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  auto begin() const { return rays_.begin(); }
  auto end() const { return rays_.end(); }

 private:
  double tol_;
  double window_;
  std::vector<Ray> rays_;
  std::multimap<double, std::size_t> index_;
};

}  // namespace zkit
