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

#include "zkit/reality.hpp"

#include <cmath>
#include <random>

#include "zkit/mub.hpp"
#include "zkit/zauner.hpp"

namespace zkit {

AntiUnitary compose(const AntiUnitary& a, const AntiUnitary& b) {
  const Operator second = a.conjugates ? Operator(b.unitary.conjugate()) : b.unitary;
  return {a.unitary * second, a.conjugates != b.conjugates};
}

Ray apply_antiunitary(const AntiUnitary& t, const Ray& psi) {
  if (t.unitary.cols() != psi.dim()) throw Error(ErrorCode::DimensionMismatch, "operator and ray dimensions differ");
  return Ray(t.apply(psi.amplitudes()));
}

bool is_manifestly_real(const Ray& psi, double tol) {
  return psi.amplitudes().imag().cwiseAbs().maxCoeff() <= tol;
}

double antiunitary_residual(const AntiUnitary& t, const Ray& psi) {
  return (apply_antiunitary(t, psi).amplitudes() - psi.amplitudes()).norm();
}

bool RealityReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

RealityReport check_real_structure(const Field& field, double tol) {
  const int p = field.modulus();
  RealityReport report;
  report.p = p;
  const Operator m = magic_gate(field);
  const Operator parity = symplectic_unitary(SymplecticMatrix(field, -1, 0, 0, -1));
  const Operator fourier = symplectic_unitary(SymplecticMatrix::fourier(field));
  const AntiUnitary uak{parity, true};
  const AntiUnitary k{Operator::Identity(p, p), true};

  // M (U_A K) = (U_A K) M, probed on a fixed pseudo-random vector.
  {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    StateVector probe(p);
    for (int i = 0; i < p; ++i) probe(i) = Complex(normal(rng), normal(rng));
    const double r = (m * uak.apply(probe) - uak.apply(m * probe)).norm();
    report.checks.push_back({"M commutes with U_A K", r <= tol, r});
  }
  {
    const Operator square = compose(uak, uak).unitary;
    const Complex c = square.trace() / static_cast<double>(p);
    const double r = max_abs(Operator(square - c * Operator::Identity(p, p)));
    report.checks.push_back({"(U_A K)^2 is a phase", r <= tol && std::abs(std::abs(c) - 1.0) <= tol, r});
  }

  const MubFamily ivanovic = ivanovic_mub(field);
  const Ray i00(ivanovic.bases[0].col(0));
  const Ray i0inf(ivanovic.bases[p].col(0));
  {
    double worst = 0.0;
    for (const AntiUnitary& t : {uak, k, AntiUnitary{parity, false}}) {
      worst = std::max({worst, antiunitary_residual(t, i00), antiunitary_residual(t, i0inf)});
    }
    report.checks.push_back({"|I_0^(0)>, |I_0^(inf)> invariant under U_A and K", worst <= tol, worst});
  }

  RaySet uak_family, real_family;
  double uak_worst = 0.0, real_worst = 0.0;
  for (int x = 1; x < p; ++x) {
    const Ray a(magic_power(field, x) * i0inf.amplitudes());
    uak_worst = std::max(uak_worst, antiunitary_residual(uak, a));
    uak_family.insert(a);
    const Ray b(fourier * magic_power(field, x) * fourier.adjoint() * i00.amplitudes());
    real_worst = std::max(real_worst, antiunitary_residual(k, b));
    if (!is_manifestly_real(b, tol)) real_worst = std::max(real_worst, b.amplitudes().imag().cwiseAbs().maxCoeff());
    real_family.insert(b);
  }
  report.uak_family_distinct = static_cast<int>(uak_family.size());
  report.real_family_distinct = static_cast<int>(real_family.size());
  report.checks.push_back({"M^x |I_0^(inf)> invariant under U_A K", uak_worst <= tol, uak_worst});
  report.checks.push_back({"U_F M^x U_F^-1 |I_0^(0)> manifestly real", real_worst <= tol, real_worst});
  report.checks.push_back({"p - 1 distinct rays in each real family",
                           report.uak_family_distinct == p - 1 && report.real_family_distinct == p - 1, 0.0});

  if (field.is_one_mod_three()) {
    const auto zauner = zauner_projector(representative_zauner(field));
    double worst = 0.0;
    for (const auto& ray : enumerate_alltop_vectors(field)) {
      if (!subspace_contains(zauner, ray)) continue;
      ++report.zauner_alltop;
      if (is_manifestly_real(ray, tol)) {
        ++report.zauner_manifestly_real;
      } else if (antiunitary_residual(uak, ray) <= tol) {
        ++report.zauner_uak_only;
        worst = std::max(worst, antiunitary_residual(uak, ray));
      } else {
        ++report.zauner_neither;
      }
    }
    const bool split = report.zauner_alltop == 2 * (p - 1) && report.zauner_manifestly_real == p - 1 &&
                       report.zauner_uak_only == p - 1 && report.zauner_neither == 0;
    report.checks.push_back({"Zauner-subspace Alltop rays split evenly between real subspaces", split, worst});
  }
  return report;
}

}  // namespace zkit
