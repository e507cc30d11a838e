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

#include <set>

#include "support.hpp"
#include "zkit/error.hpp"
#include "zkit/mub.hpp"
#include "zkit/zauner.hpp"

using namespace zkit;
using namespace zkit::testing;

namespace {

double distance(const Operator& a, const Operator& b) { return max_abs(Operator(a - b)); }

// Direct membership oracle: |P psi - psi|.
bool inside(const Operator& projector, const StateVector& psi) { return (projector * psi - psi).norm() < 1e-7; }

}  // namespace

TEST_CASE("representative order three unitary") {
  Field f(7);
  const Operator u = representative_zauner(f);
  const Operator id = Operator::Identity(7, 7);
  CHECK(distance(matrix_power(u, 3), id) < 1e-9);
  const Operator m = magic_gate(f);
  CHECK(distance(u * m, m * u) < 1e-9);

  const auto iv = ivanovic_mub(f);
  CHECK((u * iv.bases[0].col(0) - iv.bases[0].col(0)).norm() < 1e-9);
  CHECK((u * iv.bases[7].col(0) - iv.bases[7].col(0)).norm() < 1e-9);

  // No other standard vector is fixed.
  int fixed = 0;
  for (const auto& b : iv.bases)
    for (int a = 0; a < 7; ++a) fixed += (u * b.col(a) - b.col(a)).norm() < 1e-9;
  CHECK(fixed == 2);

  CHECK_THROWS_AS(representative_zauner(Field(5)), Error);
}

TEST_CASE("projector rank") {
  const auto s7 = zauner_projector(representative_zauner(Field(7)));
  CHECK(s7.rank == 3);
  CHECK(distance(s7.projector * s7.projector, s7.projector) < 1e-9);
  CHECK(distance(s7.projector.adjoint(), s7.projector) < 1e-9);
  CHECK(std::abs(s7.projector.trace() - Complex(3, 0)) < 1e-9);
  CHECK(zauner_projector(representative_zauner(Field(13))).rank == 5);
  CHECK(zauner_projector(representative_zauner(Field(19))).rank == 7);

  CHECK_THROWS_AS(zauner_projector(Operator(Operator::Identity(7, 7))), Error);
  CHECK_THROWS_AS(zauner_projector(symplectic_unitary(SymplecticMatrix::fourier(Field(7)))), Error);
}

TEST_CASE("u and u squared give the same projector") {
  Field f(7);
  for (const auto& g : enumerate_order3(f)) {
    const auto q = random_point(f);
    const Operator u = fix_phase(displacement(q) * symplectic_unitary(g), 3);
    CHECK(distance(zauner_projector(u).projector, zauner_projector(u * u).projector) < 1e-9);
  }
}

TEST_CASE("zauner subspace enumeration") {
  Field f(7);
  const auto all = enumerate_zauner_subspaces(f);
  CHECK(all.size() == 1372);
  for (const auto& s : all) CHECK(s.rank == 3);
  // Two order three elements per subspace: U and U^2.
  CHECK(enumerate_order3(f).size() * 49 == 2 * all.size());
  CHECK(7 * 7 * 7 * 8 == 2 * static_cast<int>(all.size()));
  CHECK_THROWS_AS(enumerate_zauner_subspaces(Field(11)), Error);
}

TEST_CASE("membership") {
  Field f(7);
  const auto rep = zauner_projector(representative_zauner(f));
  const auto iv = ivanovic_mub(f);
  CHECK(subspace_contains(rep, Ray(iv.bases[0].col(0))));
  CHECK(!subspace_contains(rep, Ray(iv.bases[0].col(1))));
  for (int x = 1; x < 7; ++x) {
    const StateVector a = alltop_mub(f, f(x), CliffordElement::identity(f)).bases[7].col(0);
    CHECK(subspace_contains(rep, Ray(a)));
    CHECK(inside(rep.projector, a));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Ray r(random_state(7));
    CHECK(subspace_contains(rep, r) == inside(rep.projector, r.amplitudes()));
    CHECK(membership_residual(rep, r) > 1e-4);
  }
}

TEST_CASE("trivial configuration") {
  Field f(7);
  const auto rep = zauner_projector(representative_zauner(f));
  const auto iv = ivanovic_mub(f);
  const auto r = verify_configuration({Ray(iv.bases[0].col(0))}, {rep});
  CHECK(r.m == 1);
  CHECK(r.gamma == 1);
  CHECK(r.n == 1);
  CHECK(r.pi == 1);
  CHECK(r.ok);

  const std::vector<Ray> mixed{Ray(iv.bases[0].col(0)), Ray(iv.bases[0].col(1))};
  CHECK(!compute_incidence(mixed, {rep}).ok);
  CHECK_THROWS_AS(verify_configuration(mixed, {rep}), Error);
  CHECK_THROWS_AS(compute_incidence({}, {rep}), Error);
}

TEST_CASE("configurations at p = 7") {
  Field f(7);
  const auto lines = enumerate_zauner_subspaces(f);
  const auto iv = verify_configuration(ivanovic_rays(f).rays(), lines);
  CHECK(iv.m == 56);
  CHECK(iv.gamma == 49);
  CHECK(iv.n == 1372);
  CHECK(iv.pi == 2);
  CHECK(iv.ambiguous == 0);
  CHECK(iv.m * iv.gamma == iv.n * iv.pi);

  const auto alltop = enumerate_alltop_vectors(f);
  const auto al = verify_configuration(alltop.rays(), lines);
  CHECK(al.m == 2352);
  CHECK(al.gamma == 7);
  CHECK(al.pi == 12);
  CHECK(al.ambiguous == 0);
  CHECK(al.m * al.gamma == al.n * al.pi);

  // Spot-check incidences against the direct oracle.
  for (int trial = 0; trial < 20; ++trial) {
    const int i = uniform_int(0, al.m - 1);
    const auto& ray = alltop[i];
    std::set<int> expect;
    for (int l = 0; l < al.n; ++l) {
      if (inside(lines[l].projector, ray.amplitudes())) expect.insert(l);
    }
    CHECK(std::set<int>(al.per_point[i].begin(), al.per_point[i].end()) == expect);
  }
}

TEST_CASE("clifford orbits") {
  const auto five = clifford_orbits_of_alltop(Field(5));
  CHECK(five.orbits.size() == 1);
  CHECK(five.orbits[0].size() == 600);
  CHECK(five.x_labels[0] == std::vector<int>{1, 2, 3, 4});

  Field f(7);
  const auto seven = clifford_orbits_of_alltop(f);
  REQUIRE(seven.orbits.size() == 3);
  for (const auto& o : seven.orbits) CHECK(o.size() == 784);
  CHECK(seven.x_labels == std::vector<std::vector<int>>{{1, 6}, {2, 5}, {3, 4}});
  CHECK(seven.labels_consistent);
  CHECK(seven.coset_rule_holds);
  CHECK(seven.matches_cosets);

  std::vector<int> orbit_of(seven.rays.size(), -1);
  for (std::size_t o = 0; o < seven.orbits.size(); ++o)
    for (auto i : seven.orbits[o]) orbit_of[i] = static_cast<int>(o);
  for (int trial = 0; trial < 30; ++trial) {
    const Operator c = random_clifford(f).realize();
    const std::size_t i = static_cast<std::size_t>(uniform_int(0, static_cast<int>(seven.rays.size()) - 1));
    const auto j = seven.rays.find(Ray(c * seven.rays[i].amplitudes()));
    REQUIRE(j.has_value());
    CHECK(orbit_of[*j] == orbit_of[i]);
  }

  CHECK(clifford_orbits_of_alltop(Field(11)).orbits.size() == 1);
}
