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

// Dense complex linear algebra shared by every module. Operators and states
// are plain Eigen matrices templated on the real scalar; the helpers below are
// free functions over Eigen expressions so they compose with Eigen's own API.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace zkit {

template <typename Real>
using OperatorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using StateT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using Operator = OperatorT<double>;
using StateVector = StateT<double>;

/// Construction tolerance used for all verified identities.
inline constexpr double kTolerance = 1e-9;

/// omega^k with omega = exp(2 pi i / p); k is reduced mod p first so large
/// exponents do not lose precision.
template <typename Real = double>
std::complex<Real> omega_power(int p, long long k) {
  long long r = k % p;
  if (r < 0) r += p;
  return std::polar(Real(1), Real(2) * std::numbers::pi_v<Real> * Real(r) / Real(p));
}

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? typename Derived::RealScalar(0) : m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, typename Derived::RealScalar tol = kTolerance) {
  if (u.rows() != u.cols()) return false;
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols())) <= tol;
}

/// If m = c I within tol, returns c.
template <typename Derived>
std::optional<typename Derived::Scalar> scalar_multiple_of_identity(const Eigen::MatrixBase<Derived>& m,
                                                                     typename Derived::RealScalar tol = kTolerance) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const auto c = m.trace() / typename Derived::RealScalar(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto expected = i == j ? c : typename Derived::Scalar(0);
      if (std::abs(m(i, j) - expected) > tol) return std::nullopt;
    }
  }
  return c;
}

/// Finds the unit-modulus c with a = c b within tol, if any. Works for
/// operators and state vectors alike.
template <typename DerivedA, typename DerivedB>
std::optional<typename DerivedA::Scalar> relative_phase(const Eigen::MatrixBase<DerivedA>& a,
                                                         const Eigen::MatrixBase<DerivedB>& b,
                                                         typename DerivedA::RealScalar tol = kTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const auto norm_b = b.squaredNorm();
  if (norm_b == 0) return std::nullopt;
  const auto c = b.cwiseProduct(a.conjugate()).sum();  // sum conj(a) b
  const auto phase = std::conj(c) / norm_b;
  if (std::abs(std::abs(phase) - 1) > tol) return std::nullopt;
  if (max_abs(a - phase * b) > tol) return std::nullopt;
  return phase;
}

template <typename DerivedA, typename DerivedB>
bool equal_up_to_phase(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                       typename DerivedA::RealScalar tol = kTolerance) {
  return relative_phase(a, b, tol).has_value();
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Mat = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Derived>
auto matrix_power(const Eigen::MatrixBase<Derived>& m, int n) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat acc = Mat::Identity(m.rows(), m.cols());
  Mat base = m;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc = acc * base;
    if (n > 1) base = base * base;
  }
  return acc;
}

/// Smallest d in 1..max_order with u^d = I within tol, or 0 if none.
template <typename Derived>
int operator_order(const Eigen::MatrixBase<Derived>& u, int max_order, typename Derived::RealScalar tol = kTolerance) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat id = Mat::Identity(u.rows(), u.cols());
  Mat acc = u;
  for (int d = 1; d <= max_order; ++d) {
    if (max_abs(acc - id) <= tol) return d;
    acc = acc * u;
  }
  return 0;
}

}  // namespace zkit
