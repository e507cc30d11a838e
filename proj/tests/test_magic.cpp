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

#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "zkit/error.hpp"
#include "zkit/magic.hpp"
#include "zkit/mub.hpp"

using namespace zkit;
using namespace zkit::testing;

namespace {

Operator parity_oracle(int p) {
  Operator a = Operator::Zero(p, p);
  for (int r = 0; r < p; ++r) a((p - r) % p, r) = 1.0;
  return a;
}

// W(q) = Tr(rho D_q A_0 D_q^dag) / p, evaluated without the library's cache.
std::vector<double> wigner_oracle(const StateVector& psi) {
  const int p = static_cast<int>(psi.size());
  Field f(p);
  std::vector<double> w;
  for (int q1 = 0; q1 < p; ++q1)
    for (int q2 = 0; q2 < p; ++q2) {
      const Operator d = displacement(f(q1), f(q2));
      const StateVector v = d * parity_oracle(p) * d.adjoint() * psi;
      w.push_back(psi.dot(v).real() / p);
    }
  return w;
}

DensityMatrix random_mixed(int p) {
  Operator g(p, p);
  for (int c = 0; c < p; ++c) g.col(c) = random_state(p);
  Operator rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho, p);
}

}  // namespace

TEST_CASE("phase point operators") {
  Field f7(7);
  const Operator a0 = phase_point_operator({f7(0), f7(0)});
  CHECK(max_abs(Operator(a0 - parity_oracle(7))) < 1e-12);
  CHECK(std::abs(phase_point_operator({f7(1), f7(2)}).trace() - 1.0) < 1e-12);

  Field f5(5);
  Operator sum = Operator::Zero(5, 5);
  for (const auto& a : phase_point_operators(5)) {
    sum += a;
    CHECK(max_abs(Operator(a - a.adjoint())) < 1e-12);
    CHECK(max_abs(Operator(a * a - Operator::Identity(5, 5))) < 1e-12);
  }
  CHECK(max_abs(Operator(sum / 5.0 - Operator::Identity(5, 5))) < 1e-12);
}

TEST_CASE("wigner function") {
  const auto mixed = wigner(DensityMatrix::maximally_mixed(7));
  for (double w : mixed.values) CHECK(std::abs(w - 1.0 / 49) < 1e-12);

  for (int p : {5, 7}) {
    for (int trial = 0; trial < 100; ++trial) {
      const StateVector psi = random_state(p);
      const auto w = wigner(DensityMatrix::pure(psi, p));
      CHECK(std::abs(w.sum() - 1.0) < 1e-9);
      const auto oracle = wigner_oracle(psi);
      double worst = 0.0;
      for (std::size_t i = 0; i < oracle.size(); ++i) worst = std::max(worst, std::abs(oracle[i] - w.values[i]));
      CHECK(worst < 1e-12);
    }
  }

  Field f(7);
  for (const auto& r : ivanovic_mub(f).rays()) {
    for (double w : wigner(DensityMatrix::pure(r)).values) CHECK(w >= -1e-12);
  }
  const auto a = wigner(DensityMatrix::pure(Ray(alltop_mub(f, f(1), CliffordElement::identity(f)).bases[1].col(0))));
  CHECK(a.negativity() > 0.01);

  CHECK_THROWS_AS(wigner(DensityMatrix::maximally_mixed(5, 3)), Error);
}

TEST_CASE("density matrix validation") {
  Operator bad = Operator::Identity(5, 5) / 5.0;
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(bad, 5), Error);
  CHECK_THROWS_AS(DensityMatrix(Operator(Operator::Identity(5, 5)), 5), Error);
  Operator negative = Operator::Zero(5, 5);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(negative, 5), Error);
  CHECK_THROWS_AS(DensityMatrix(Operator(Operator::Identity(6, 6) / 6.0), 5), Error);
  CHECK_THROWS_AS(DensityMatrix::pure(StateVector::Zero(5), 5), Error);
}

TEST_CASE("mana of stabilizer and alltop states") {
  Field f(7);
  for (const auto& r : ivanovic_mub(f).rays()) CHECK(std::abs(pure_state_mana(r.amplitudes())) < 1e-9);
  const double a1 = pure_state_mana(alltop_mub(f, f(1), CliffordElement::identity(f)).bases[2].col(3));
  const double a2 = pure_state_mana(alltop_mub(f, f(2), CliffordElement::identity(f)).bases[5].col(1));
  const double a3 = pure_state_mana(alltop_mub(f, f(3), CliffordElement::identity(f)).bases[1].col(0));
  CHECK(std::abs(a1 - 0.8148) < 5e-4);
  CHECK(std::abs(a2 - 0.8148) < 5e-4);
  CHECK(std::abs(a3 - 0.8962) < 5e-4);
}

TEST_CASE("mana report") {
  const auto seven = mana_report(Field(7));
  REQUIRE(seven.size() == 3);
  CHECK(seven[0].x_labels == std::vector<int>{1, 6});
  CHECK(std::abs(seven[0].mana - 0.8148) < 5e-4);
  CHECK(std::abs(seven[1].mana - 0.8148) < 5e-4);
  CHECK(std::abs(seven[2].mana - 0.8962) < 5e-4);
  for (const auto& row : seven) {
    CHECK(row.orbit_size == 784);
    CHECK(row.spread < 1e-9);
  }
  const auto five = mana_report(Field(5));
  REQUIRE(five.size() == 1);
  CHECK(five[0].mana > 0.1);
  CHECK(five[0].spread < 1e-9);
}

TEST_CASE("mana properties") {
  // Positivity.
  for (int trial = 0; trial < 1000; ++trial) CHECK(pure_state_mana(random_state(5)) >= -1e-12);

  // Clifford invariance.
  for (int p : {5, 7}) {
    Field f(p);
    for (int trial = 0; trial < 50; ++trial) {
      const StateVector psi = random_state(p);
      const Operator c = random_clifford(f).realize();
      CHECK(std::abs(pure_state_mana(c * psi) - pure_state_mana(psi)) < 1e-9);
    }
  }

  // Additivity.
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_mixed(5), b = DensityMatrix::pure(random_state(5), 5);
    const auto ab = tensor(a, b);
    CHECK(ab.qudits() == 2);
    CHECK(std::abs(wigner(ab).sum() - 1.0) < 1e-9);
    CHECK(std::abs(mana(ab) - mana(a) - mana(b)) < 1e-9);
  }

  // Mixing with the maximally mixed state never increases mana.
  const auto noise = DensityMatrix::maximally_mixed(5).matrix();
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = DensityMatrix::pure(random_state(5), 5);
    double previous = mana(rho);
    for (double lambda : {0.1, 0.3, 0.5, 0.9}) {
      const double m = mana(DensityMatrix((1 - lambda) * rho.matrix() + lambda * noise, 5));
      CHECK(m <= previous + 1e-12);
      previous = m;
    }
  }
}

TEST_CASE("copies lower bound") {
  Field f(5);
  const auto rho = DensityMatrix::pure(Ray(alltop_mub(f, f(1), CliffordElement::identity(f)).bases[1].col(0)));
  CHECK(std::abs(copies_lower_bound(rho, rho) - 1.0) < 1e-12);
  CHECK(std::abs(copies_lower_bound(tensor(rho, rho), rho) - 2.0) < 1e-6);
  const auto stab = DensityMatrix::pure(Ray(ivanovic_mub(f).bases[2].col(1)));
  CHECK_THROWS_AS(copies_lower_bound(rho, stab), Error);
}

TEST_CASE("mana maximizer") {
  const auto seven = maximize_mana(Field(7), 50, 500);
  CHECK(seven.mana >= 0.8962);
  CHECK(seven.mana >= 0.89);
  CHECK(seven.mana <= 0.9022 + 0.005);
  CHECK(std::abs(pure_state_mana(seven.state.amplitudes()) - seven.mana) < 1e-9);

  const auto again = maximize_mana(Field(7), 50, 500);
  CHECK(again.mana == seven.mana);

  const auto five = maximize_mana(Field(5), 20, 300);
  CHECK(five.mana >= mana_report(Field(5))[0].mana - 1e-9);
  CHECK_THROWS_AS(maximize_mana(Field(5), 0, 10), Error);
}
