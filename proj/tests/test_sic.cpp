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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "support.hpp"
#include "zkit/error.hpp"
#include "zkit/io.hpp"
#include "zkit/mub.hpp"
#include "zkit/sic.hpp"

using namespace zkit;
using namespace zkit::testing;

namespace {

std::filesystem::path write_state(const std::string& name, const StateVector& psi) {
  const auto path = std::filesystem::temp_directory_path() / ("zkit_sic_" + name + ".json");
  io::write_json_file(path, io::state_to_json(psi));
  return path;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("fiducial files") {
  const StateVector psi = random_state(7);
  const auto ok = load_fiducial(write_state("ok", psi), 7);
  CHECK(ok.dim() == 7);
  CHECK(ok.label == "zkit_sic_ok");
  CHECK(ok.ray.same_ray(Ray(psi)));

  CHECK(code_of([&] { load_fiducial(write_state("six", random_state(6)), 7); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { load_fiducial(write_state("zero", StateVector::Zero(7)), 7); }) == ErrorCode::NonUnitNorm);
  CHECK(code_of([&] { load_fiducial(write_state("long", 2.0 * psi), 7); }) == ErrorCode::NonUnitNorm);

  const auto garbage = std::filesystem::temp_directory_path() / "zkit_sic_garbage.json";
  std::ofstream(garbage) << "{\"dim\": 7, \"amplitudes\": [";
  CHECK(code_of([&] { load_fiducial(garbage, 7); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { load_fiducial("/nonexistent/zkit.json", 7); }) == ErrorCode::ParseError);

  auto labelled = io::state_to_json(psi);
  labelled["label"] = "7x";
  const auto path = std::filesystem::temp_directory_path() / "zkit_sic_labelled.json";
  io::write_json_file(path, labelled);
  CHECK(load_fiducial(path, 7).label == "7x");
}

TEST_CASE("non-fiducials fail verification") {
  for (int trial = 0; trial < 5; ++trial) {
    const auto r = verify_sic(make_fiducial(random_state(7), 7));
    CHECK(!r.pass);
    CHECK(r.max_deviation > 1e-3);
  }
  const auto stab = verify_sic(make_fiducial(ivanovic_mub(Field(7)).bases[3].col(2), 7));
  CHECK(!stab.pass);
  CHECK(std::abs(stab.max_deviation - 0.875) < 1e-9);
}

TEST_CASE("zauner membership of fiducials") {
  Field f(7);
  const auto subspaces = enumerate_zauner_subspaces(f);
  CHECK(fiducial_zauner_check(make_fiducial(random_state(7), 7), subspaces).empty());

  const std::size_t target = 417;
  const StateVector inside = (subspaces[target].projector * random_state(7)).normalized();
  const auto hits = fiducial_zauner_check(make_fiducial(inside, 7), subspaces);
  CHECK(std::find(hits.begin(), hits.end(), target) != hits.end());
}

TEST_CASE("fiducial mana") {
  CHECK(std::abs(sic_mana(make_fiducial(ivanovic_mub(Field(7)).bases[0].col(4), 7))) < 1e-9);
  Field f(7);
  const auto psi = make_fiducial(random_state(7), 7);
  for (const auto& q : all_phase_points(f)) {
    CHECK(std::abs(sic_mana(make_fiducial(displacement(q) * psi.ray.amplitudes(), 7)) - sic_mana(psi)) < 1e-9);
  }
}

TEST_CASE("external fiducial") {
  const char* path = std::getenv("ZKIT_SIC_FIDUCIAL");
  if (path == nullptr) {
    MESSAGE("ZKIT_SIC_FIDUCIAL not set; skipping external fiducial checks");
    return;
  }
  const auto psi = load_fiducial(path, 7);
  const auto r = verify_sic(psi);
  CHECK(r.pass);
  CHECK(r.max_deviation <= 1e-6);

  // A passing fiducial gives 49 pairwise distinct rays.
  Field f(7);
  RaySet rays;
  for (const auto& q : all_phase_points(f)) rays.insert(Ray(displacement(q) * psi.ray.amplitudes()));
  CHECK(rays.size() == 49);
  for (const auto& ray : rays) CHECK(std::abs(sic_mana(make_fiducial(ray.amplitudes(), 7)) - sic_mana(psi)) < 1e-9);
  CHECK(!fiducial_zauner_check(psi).empty());
}
