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
#include <vector>

#include "zkit/ray.hpp"
#include "zkit/representation.hpp"
#include "zkit/zauner.hpp"

namespace zkit {

/// A validated state on n = 1 or more qudits of prime dimension p: Hermitian,
/// unit trace and positive semidefinite, all within tol.
class DensityMatrix {
 public:
  DensityMatrix(Operator rho, int p, double tol = kTolerance);

  static DensityMatrix pure(const StateVector& psi, int p);
  static DensityMatrix pure(const Ray& psi) { return pure(psi.amplitudes(), psi.dim()); }
  static DensityMatrix maximally_mixed(int p, int qudits = 1);

  const Operator& matrix() const noexcept { return rho_; }
  int local_dim() const noexcept { return p_; }
  int qudits() const noexcept { return qudits_; }
  int dim() const noexcept { return static_cast<int>(rho_.rows()); }

  friend DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

 private:
  Operator rho_;
  int p_;
  int qudits_;
};

/// Values indexed by phase-space points: for one qudit, index q1 * p + q2;
/// for two, ((q1 * p + q2) * p + r1) * p + r2.
struct WignerFunction {
  int p = 0;
  int qudits = 0;
  std::vector<double> values;

  double sum() const;
  double negativity() const;  // sum of |W| over the negative entries
};

/// A_r = D_r U_A D_r^dagger with U_A the positive-sign parity |s> -> |-s>.
Operator phase_point_operator(const PhasePoint& r);

/// All p^2 single-qudit phase-point operators in WignerFunction index order.
const std::vector<Operator>& phase_point_operators(int p);

/// W(r) = Tr(rho A_r) / p^n with tensor-product phase-point operators.
/// Throws UnsupportedDim for more than two qudits.
WignerFunction wigner(const DensityMatrix& rho);

/// ln sum_r |W(r)|.
double mana(const DensityMatrix& rho);
/// Pure-state shortcut avoiding the density matrix; same value as mana(pure(psi)).
double pure_state_mana(const StateVector& psi);

struct ManaRow {
  std::vector<int> x_labels;   // exponents labelling the orbit
  std::size_t orbit_size = 0;
  double mana = 0.0;           // mana of the first ray in the orbit
  double spread = 0.0;         // max - min over the whole orbit
};

/// Mana per Clifford orbit of Alltop rays, in orbit order.
std::vector<ManaRow> mana_report(const Field& field);
std::vector<ManaRow> mana_report(const OrbitDecomposition& decomposition);

/// mana(sigma) / mana(rho), the number of copies of rho needed to produce
/// sigma with stabilizer operations. Throws ZeroManaResource if mana(rho) <= tol.
double copies_lower_bound(const DensityMatrix& sigma, const DensityMatrix& rho, double tol = kTolerance);

struct ManaMaximum {
  Ray state;
  double mana;
};

/// Random-restart local ascent of single-qudit pure-state mana. Each restart
/// runs projected gradient steps with step halving, then refines the sign
/// pattern of W by repeated top-eigenvector solves. Restarts draw from
/// independent streams derived from seed, so the result does not depend on
/// thread count.
ManaMaximum maximize_mana(const Field& field, int restarts, int iterations, std::uint64_t seed = 20160901);

}  // namespace zkit
