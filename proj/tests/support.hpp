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

#include <cstdint>
#include <random>

#include "zkit/linalg.hpp"
#include "zkit/representation.hpp"
#include "zkit/symplectic.hpp"

namespace zkit::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed);
  return engine;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline StateVector random_state(int dim) {
  std::normal_distribution<double> normal;
  StateVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(normal(rng()), normal(rng()));
  return v.normalized();
}

inline PhasePoint random_point(const Field& f) {
  return {f(uniform_int(0, f.modulus() - 1)), f(uniform_int(0, f.modulus() - 1))};
}

// Rejection sampling over all 2x2 matrices.
inline SymplecticMatrix random_symplectic(const Field& f) {
  const int p = f.modulus();
  for (;;) {
    const int a = uniform_int(0, p - 1), b = uniform_int(0, p - 1), c = uniform_int(0, p - 1), d = uniform_int(0, p - 1);
    if (((a * d - b * c) % p + p) % p == 1) return SymplecticMatrix(f, a, b, c, d);
  }
}

inline CliffordElement random_clifford(const Field& f) {
  return {f(uniform_int(0, f.modulus() - 1)), random_point(f), random_symplectic(f)};
}

}  // namespace zkit::testing
