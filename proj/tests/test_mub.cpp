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
#include "zkit/mub.hpp"
#include "zkit/ray.hpp"

using namespace zkit;
using namespace zkit::testing;

namespace {

// Overlap oracle: every cross pair of vectors from distinct bases.
double worst_cross_overlap(const MubFamily& mub) {
  const int p = mub.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < mub.bases.size(); ++i)
    for (std::size_t j = i + 1; j < mub.bases.size(); ++j)
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
          Complex s = 0;
          for (int r = 0; r < p; ++r) s += std::conj(mub.bases[i](r, a)) * mub.bases[j](r, b);
          worst = std::max(worst, std::abs(std::norm(s) - 1.0 / p));
        }
  return worst;
}

}  // namespace

TEST_CASE("ray canonical form") {
  StateVector v(3);
  v << Complex(0, 0), Complex(0, 2), Complex(1, 1);
  const Ray r(v);
  CHECK(std::abs(r.amplitudes().norm() - 1.0) < 1e-12);
  CHECK(std::abs(r.amplitudes()(0)) < 1e-12);
  CHECK(r.amplitudes()(1).real() > 0);
  CHECK(std::abs(r.amplitudes()(1).imag()) < 1e-12);

  for (int trial = 0; trial < 50; ++trial) {
    const StateVector psi = random_state(7);
    const Ray a(psi), b(std::polar(3.0, 6.28 * trial / 50.0) * psi);
    CHECK(a.same_ray(b));
    CHECK(std::abs(a.fingerprint() - b.fingerprint()) < 1e-9);
    CHECK((a.amplitudes() - b.amplitudes()).norm() < 1e-9);
  }
  CHECK_THROWS_AS(Ray(StateVector::Zero(5)), Error);
}

TEST_CASE("ray set deduplicates up to phase") {
  RaySet set;
  std::vector<StateVector> states;
  for (int i = 0; i < 40; ++i) states.push_back(random_state(5));
  for (const auto& s : states) CHECK(set.insert(Ray(s)).second);
  for (std::size_t i = 0; i < states.size(); ++i) {
    StateVector noisy = std::polar(1.0, 0.1 * i) * states[i];
    noisy(0) += 1e-11;
    const auto [index, inserted] = set.insert(Ray(noisy));
    CHECK(!inserted);
    CHECK(index == i);
  }
  CHECK(set.size() == 40);

  RaySet other;
  other.insert(Ray(states[3]));
  other.insert(Ray(random_state(5)));
  set.merge(other);
  CHECK(set.size() == 41);
}

TEST_CASE("ivanovic family") {
  for (int p : {5, 7, 13}) {
    Field f(p);
    const auto mub = ivanovic_mub(f);
    REQUIRE(mub.bases.size() == static_cast<std::size_t>(p + 1));
    CHECK(max_abs(Operator(mub.bases[0] - Operator::Identity(p, p))) < 1e-12);
    CHECK(mub.labels.back().is_infinity());
    Operator dft(p, p);
    for (int r = 0; r < p; ++r)
      for (int s = 0; s < p; ++s) dft(r, s) = std::polar(1.0 / std::sqrt(p), 2 * M_PI * (r * s % p) / p);
    CHECK(max_abs(Operator(mub.bases.back() - dft)) < 1e-12);
    CHECK(worst_cross_overlap(mub) < 1e-9);
    CHECK(mub_deviation(mub) < 1e-9);
  }
}

TEST_CASE("unbiasedness predicate") {
  Field f(7);
  const auto iv = ivanovic_mub(f);
  CHECK(!is_unbiased(iv.bases[0], iv.bases[0]));
  CHECK(is_unbiased(iv.bases[0], iv.bases.back()));
  // Each Alltop family keeps exactly one Ivanovic basis: z = 0 when built
  // from M itself, z = inf when M is conjugated by U_F.
  const auto plain = alltop_mub(f, f(1), CliffordElement::identity(f));
  const auto turned = alltop_mub(f, f(1), fourier_conjugator(f));
  CHECK(is_unbiased(turned.bases[1], iv.bases.back()));
  CHECK(is_unbiased(plain.bases[1], iv.bases[0]));
  CHECK(!is_unbiased(plain.bases[1], iv.bases.back()));
  CHECK_THROWS_AS(is_unbiased(iv.bases[0], Operator::Identity(5, 5)), Error);
}

TEST_CASE("alltop families") {
  Field f(7);
  const auto iv = ivanovic_mub(f);
  for (int x = 1; x < 7; ++x) {
    const auto plain = alltop_mub(f, f(x), CliffordElement::identity(f));
    CHECK(matching_basis(iv, plain.bases[0]) == 0);
    const auto turned = alltop_mub(f, f(x), fourier_conjugator(f));
    CHECK(matching_basis(iv, turned.bases.back()) == 7);
    CHECK(mub_deviation(plain) < 1e-9);
    CHECK(mub_deviation(turned) < 1e-9);
  }
  Field f5(5);
  CHECK(worst_cross_overlap(alltop_mub(f5, f5(1), CliffordElement::identity(f5))) < 1e-9);
  CHECK_THROWS_AS(alltop_mub(f, f(0), CliffordElement::identity(f)), Error);
}

TEST_CASE("translations permute vectors within an ivanovic basis") {
  Field f(7);
  const auto iv = ivanovic_mub(f);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator d = displacement(random_point(f));
    for (std::size_t b = 0; b < iv.bases.size(); ++b) CHECK(matching_basis(iv, d * iv.bases[b]) == static_cast<int>(b));
  }
}

TEST_CASE("alltop vector counts") {
  for (int p : {5, 7}) {
    Field f(p);
    const auto all = enumerate_alltop(f);
    CHECK(all.rays.size() == static_cast<std::size_t>(p * p * (p + 1) * (p - 1)));
    const auto iv = ivanovic_rays(f);
    CHECK(iv.size() == static_cast<std::size_t>(p * (p + 1)));
    for (const auto& r : all.rays) CHECK(!iv.contains(r));
  }
}

TEST_CASE("alltop bases are eigenbases of order p cliffords") {
  const int p = 5;
  Field f(p);
  const auto all = enumerate_alltop(f);
  const auto iv = ivanovic_rays(f);
  Operator spectrum = Operator::Zero(p, p);
  for (int a = 0; a < p; ++a) spectrum(a, a) = omega_power(p, a);

  std::vector<Operator> distinct;
  for (const auto& family : all.transversal) {
    for (const auto& basis : family.bases) {
      if (iv.contains(Ray(basis.col(0)))) continue;
      bool seen = false;
      for (const auto& d : distinct) {
        seen = seen || (d.adjoint() * basis).cwiseAbs2().maxCoeff() > 1 - 1e-8;
        if (seen) break;
      }
      if (seen) continue;
      distinct.push_back(basis);
      const Operator u = basis * spectrum * basis.adjoint();
      CHECK(clifford_match(u).has_value());
      CHECK(operator_order(u, p) == p);
    }
  }
  // Each distinct basis with p vectors accounts for all rays exactly once.
  CHECK(distinct.size() == static_cast<std::size_t>(p * (p + 1) * (p - 1)));
}
