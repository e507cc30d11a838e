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

#include "zkit/magic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "zkit/parallel.hpp"
#include "zkit/zauner.hpp"

namespace zkit {

namespace {

int qudit_count(Eigen::Index dim, int p) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d *= p;
    ++n;
  }
  if (d != dim || n == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension " + std::to_string(dim) + " is not a power of " + std::to_string(p));
  }
  return n;
}

// Tr(a b) without forming the product.
Complex trace_of_product(const Operator& a, const Operator& b) { return a.cwiseProduct(b.transpose()).sum(); }

}  // namespace

DensityMatrix::DensityMatrix(Operator rho, int p, double tol) : rho_(std::move(rho)), p_(p) {
  if (rho_.rows() != rho_.cols()) throw Error(ErrorCode::DimensionMismatch, "density matrix is not square");
  qudits_ = qudit_count(rho_.rows(), p);
  if (max_abs(Operator(rho_ - rho_.adjoint())) > tol) throw Error(ErrorCode::InvalidArgument, "density matrix is not Hermitian");
  if (std::abs(rho_.trace() - 1.0) > tol) throw Error(ErrorCode::InvalidArgument, "density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Operator> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) throw Error(ErrorCode::InvalidArgument, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi, int p) {
  const StateVector v = psi.normalized();
  return DensityMatrix(v * v.adjoint(), p);
}

DensityMatrix DensityMatrix::maximally_mixed(int p, int qudits) {
  const auto dim = static_cast<Eigen::Index>(std::pow(p, qudits));
  return DensityMatrix(Operator::Identity(dim, dim) / static_cast<double>(dim), p);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::DimensionMismatch, "tensoring qudits of different dimension");
  return DensityMatrix(kron(a.rho_, b.rho_), a.p_);
}

double WignerFunction::sum() const {
  double s = 0.0;
  for (double w : values) s += w;
  return s;
}

double WignerFunction::negativity() const {
  double s = 0.0;
  for (double w : values) s += w < 0 ? -w : 0.0;
  return s;
}

Operator phase_point_operator(const PhasePoint& r) {
  const Field field(r.first.modulus());
  const Operator d = displacement(r);
  return d * symplectic_unitary(SymplecticMatrix(field, -1, 0, 0, -1)) * d.adjoint();
}

const std::vector<Operator>& phase_point_operators(int p) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<Operator>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[p];
  if (!slot) {
    slot = std::make_unique<std::vector<Operator>>();
    for (const auto& r : all_phase_points(Field(p))) slot->push_back(phase_point_operator(r));
  }
  return *slot;
}

WignerFunction wigner(const DensityMatrix& rho) {
  const int p = rho.local_dim();
  const auto& ops = phase_point_operators(p);
  WignerFunction w{p, rho.qudits(), {}};
  const Operator& m = rho.matrix();
  if (rho.qudits() == 1) {
    for (const auto& a : ops) w.values.push_back(trace_of_product(m, a).real() / p);
  } else if (rho.qudits() == 2) {
    const double norm = static_cast<double>(p) * p;
    for (const auto& a : ops) {
      for (const auto& b : ops) w.values.push_back(trace_of_product(m, kron(a, b)).real() / norm);
    }
  } else {
    throw Error(ErrorCode::UnsupportedDim, "Wigner functions are limited to two qudits");
  }
  return w;
}

double mana(const DensityMatrix& rho) {
  double total = 0.0;
  for (double v : wigner(rho).values) total += std::abs(v);
  return std::log(total);
}

namespace {

double pure_abs_sum(const StateVector& psi, const std::vector<Operator>& ops) {
  double total = 0.0;
  for (const auto& a : ops) total += std::abs(psi.dot(a * psi).real());
  return total / static_cast<double>(psi.size());
}

}  // namespace

double pure_state_mana(const StateVector& psi) {
  const auto p = static_cast<int>(psi.size());
  return std::log(pure_abs_sum(psi.normalized(), phase_point_operators(p)));
}

std::vector<ManaRow> mana_report(const Field& field) { return mana_report(clifford_orbits_of_alltop(field)); }

std::vector<ManaRow> mana_report(const OrbitDecomposition& decomposition) {
  std::vector<ManaRow> rows;
  for (std::size_t o = 0; o < decomposition.orbits.size(); ++o) {
    const auto& orbit = decomposition.orbits[o];
    std::vector<double> values(orbit.size());
    parallel_for(orbit.size(), [&](std::size_t i) {
      values[i] = pure_state_mana(decomposition.rays[orbit[i]].amplitudes());
    });
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    rows.push_back({decomposition.x_labels[o], orbit.size(), values.front(), *hi - *lo});
  }
  return rows;
}

double copies_lower_bound(const DensityMatrix& sigma, const DensityMatrix& rho, double tol) {
  const double resource = mana(rho);
  if (resource <= tol) throw Error(ErrorCode::ZeroManaResource, "resource state has no mana");
  return mana(sigma) / resource;
}

namespace {

struct Climb {
  StateVector psi;
  double value;
};

// Projected gradient ascent of sum |W| on the unit sphere, step halving on failure.
Climb gradient_ascent(StateVector psi, const std::vector<Operator>& ops, int iterations) {
  const double p = static_cast<double>(psi.size());
  double value = pure_abs_sum(psi, ops);
  double step = 0.5;
  for (int it = 0; it < iterations && step > 1e-12; ++it) {
    StateVector grad = StateVector::Zero(psi.size());
    for (const auto& a : ops) {
      const StateVector ap = a * psi;
      grad += (psi.dot(ap).real() >= 0 ? 1.0 : -1.0) * ap;
    }
    grad /= p;
    grad -= psi.dot(grad) * psi;
    const StateVector trial = (psi + step * grad).normalized();
    const double trial_value = pure_abs_sum(trial, ops);
    if (trial_value > value) {
      psi = trial;
      value = trial_value;
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
  return {psi, value};
}

// Fixing the signs s_r of W, sum_r s_r W(r) is a Rayleigh quotient whose
// maximizer bounds the new sum |W| from below, so this never decreases.
Climb sign_pattern_refine(Climb c, const std::vector<Operator>& ops) {
  const auto n = c.psi.size();
  for (int round = 0; round < 200; ++round) {
    Operator h = Operator::Zero(n, n);
    for (const auto& a : ops) h += (c.psi.dot(a * c.psi).real() >= 0 ? 1.0 : -1.0) * a;
    Eigen::SelfAdjointEigenSolver<Operator> solver(h);
    const StateVector top = solver.eigenvectors().col(n - 1);
    const double value = pure_abs_sum(top, ops);
    if (value <= c.value + 1e-14) break;
    c = {top, value};
  }
  return c;
}

}  // namespace

ManaMaximum maximize_mana(const Field& field, int restarts, int iterations, std::uint64_t seed) {
  if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "need at least one restart");
  const int p = field.modulus();
  const auto& ops = phase_point_operators(p);
  std::vector<Climb> results(restarts, Climb{StateVector::Zero(p), -1.0});
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    StateVector psi(p);
    for (int i = 0; i < p; ++i) psi(i) = Complex(normal(rng), normal(rng));
    results[r] = sign_pattern_refine(gradient_ascent(psi.normalized(), ops, iterations), ops);
  });
  const auto best = std::max_element(results.begin(), results.end(),
                                     [](const Climb& a, const Climb& b) { return a.value < b.value; });
  return {Ray(best->psi), std::log(best->value)};
}

}  // namespace zkit
