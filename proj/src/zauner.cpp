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

#include "zkit/zauner.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "zkit/parallel.hpp"

namespace zkit {

namespace {

constexpr double kProjectorTolerance = 1e-8;

void require_one_mod_three(int p) {
  if (p % 3 != 1) {
    throw Error(ErrorCode::WrongResidueClass,
                "Zauner subspaces are only configured for p = 1 mod 3, got p = " + std::to_string(p));
  }
}

int zauner_rank(int p) { return (p - 1) / 3 + 1; }

double projector_fingerprint(const Operator& proj) {
  double f = 0.0;
  for (Eigen::Index i = 0; i < proj.rows(); ++i) {
    for (Eigen::Index j = 0; j < proj.cols(); ++j) {
      const double w = 1.0 + std::fmod(static_cast<double>(i * proj.cols() + j + 1) * 0.6180339887498949, 1.0);
      f += w * proj(i, j).real() + 0.5 * w * proj(i, j).imag();
    }
  }
  return f;
}

}  // namespace

Operator representative_zauner(const Field& field) {
  require_one_mod_three(field.modulus());
  return symplectic_unitary(SymplecticMatrix::diagonal(primitive_cube_root(field)));
}

ZaunerSubspace zauner_projector(const Operator& u, const CliffordElement& source, double tol) {
  const auto p = static_cast<int>(u.rows());
  if (u.cols() != p) throw Error(ErrorCode::DimensionMismatch, "operator is not square");
  if (scalar_multiple_of_identity(u, tol)) throw Error(ErrorCode::NotOrderThree, "scalar operators have order one");
  const Operator id = Operator::Identity(p, p);
  if (max_abs(matrix_power(u, 3) - id) > tol) throw Error(ErrorCode::NotOrderThree, "U^3 != I");
  require_one_mod_three(p);

  for (int j = 0; j < 3; ++j) {
    const Operator branch = omega_power(3, j) * u;
    Operator proj = (id + branch + branch * branch) / 3.0;
    const int rank = static_cast<int>(std::lround(proj.trace().real()));
    if (rank == zauner_rank(p)) return {std::move(proj), source, rank};
  }
  throw Error(ErrorCode::NotOrderThree, "no branch has an eigenvalue-one space of dimension (p-1)/3+1");
}

ZaunerSubspace zauner_projector(const Operator& u, double tol) {
  const Field field(static_cast<int>(u.rows()));
  auto source = clifford_match(u, tol);
  return zauner_projector(u, source ? *source : CliffordElement::identity(field), tol);
}

std::vector<ZaunerSubspace> enumerate_zauner_subspaces(const Field& field) {
  require_one_mod_three(field.modulus());
  const auto order3 = enumerate_order3(field);
  const auto points = all_phase_points(field);

  std::vector<Operator> sym;
  sym.reserve(order3.size());
  for (const auto& g : order3) sym.push_back(symplectic_unitary(g));

  std::vector<std::optional<ZaunerSubspace>> candidates(order3.size() * points.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const std::size_t gi = i / points.size();
    const PhasePoint& q = points[i % points.size()];
    const Operator c = fix_phase(displacement(q) * sym[gi], 3);
    candidates[i] = zauner_projector(c, CliffordElement{field.zero(), q, order3[gi]});
  });

  std::vector<ZaunerSubspace> unique;
  std::multimap<double, std::size_t> index;
  for (auto& slot : candidates) {
    auto& cand = *slot;
    const double f = projector_fingerprint(cand.projector);
    bool seen = false;
    for (auto it = index.lower_bound(f - 1e-6); it != index.end() && it->first <= f + 1e-6; ++it) {
      if (max_abs(unique[it->second].projector - cand.projector) <= kProjectorTolerance) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    index.emplace(f, unique.size());
    unique.push_back(std::move(cand));
  }
  return unique;
}

double membership_residual(const ZaunerSubspace& s, const Ray& psi) {
  if (psi.dim() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "ray and subspace dimensions differ");
  return (s.projector * psi.amplitudes() - psi.amplitudes()).norm();
}

bool subspace_contains(const ZaunerSubspace& s, const Ray& psi, double tol) {
  return membership_residual(s, psi) <= tol;
}

namespace {

// Most frequent value; ties go to the smaller value.
int mode(const std::vector<std::vector<int>>& lists) {
  std::map<int, int> freq;
  for (const auto& l : lists) ++freq[static_cast<int>(l.size())];
  return std::max_element(freq.begin(), freq.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
}

}  // namespace

IncidenceReport compute_incidence(const std::vector<Ray>& points, const std::vector<ZaunerSubspace>& lines,
                                  double tol) {
  if (points.empty() || lines.empty()) throw Error(ErrorCode::InvalidArgument, "configuration needs points and lines");
  IncidenceReport report;
  report.m = static_cast<int>(points.size());
  report.n = static_cast<int>(lines.size());
  report.per_point.resize(points.size());
  std::vector<std::size_t> ambiguous(points.size(), 0);

  parallel_for(points.size(), [&](std::size_t i) {
    for (std::size_t l = 0; l < lines.size(); ++l) {
      const double r = membership_residual(lines[l], points[i]);
      if (r > 1e-10 && r < 1e-4) ++ambiguous[i];
      if (r <= tol) report.per_point[i].push_back(static_cast<int>(l));
    }
  });
  report.ambiguous = std::accumulate(ambiguous.begin(), ambiguous.end(), std::size_t{0});

  report.per_line.resize(lines.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int l : report.per_point[i]) report.per_line[l].push_back(static_cast<int>(i));
  }

  report.gamma = mode(report.per_point);
  report.pi = mode(report.per_line);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int c = static_cast<int>(report.per_point[i].size());
    if (c != report.gamma) report.violations.push_back({"point", i, c, report.gamma});
  }
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const int c = static_cast<int>(report.per_line[l].size());
    if (c != report.pi) report.violations.push_back({"line", l, c, report.pi});
  }
  report.ok = report.violations.empty() && report.gamma > 0;
  return report;
}

IncidenceReport verify_configuration(const std::vector<Ray>& points, const std::vector<ZaunerSubspace>& lines,
                                     double tol) {
  auto report = compute_incidence(points, lines, tol);
  if (!report.ok) {
    std::string what = "incidences are not uniform";
    if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      what = v.kind + " " + std::to_string(v.index) + " has " + std::to_string(v.count) + " incidences, expected " +
             std::to_string(v.expected);
    }
    throw Error(ErrorCode::NotAConfiguration, what);
  }
  return report;
}

OrbitDecomposition clifford_orbits_of_alltop(const Field& field) {
  const int p = field.modulus();
  OrbitDecomposition out;
  out.rays = enumerate_alltop_vectors(field);
  const auto& rays = out.rays;

  const std::vector<Operator> generators{
      symplectic_unitary(SymplecticMatrix::shear(field)), symplectic_unitary(SymplecticMatrix::fourier(field)),
      displacement(field.one(), field.zero()), displacement(field.zero(), field.one())};

  std::vector<int> orbit_of(rays.size(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < rays.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::deque<std::size_t> queue{start};
    orbit_of[start] = id;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      orbits[id].push_back(i);
      for (const auto& g : generators) {
        const auto j = rays.find(Ray(g * rays[i].amplitudes()));
        if (!j) throw Error(ErrorCode::ClosureViolation, "a Clifford generator left the Alltop set");
        if (orbit_of[*j] < 0) {
          orbit_of[*j] = id;
          queue.push_back(*j);
        }
      }
    }
  }

  // Label each orbit by the exponents x of the representatives M^x |I_0^(1)>.
  const MubFamily ivanovic = ivanovic_mub(field);
  const auto orbit_of_vector = [&](int x, int z, int a) {
    const auto idx = rays.find(Ray(magic_power(field, x) * ivanovic.bases[z].col(a)));
    return idx ? orbit_of[*idx] : -1;
  };
  std::vector<int> label_orbit(p, -1);
  for (int x = 1; x < p; ++x) label_orbit[x] = orbit_of_vector(x, 1, 0);
  out.labels_consistent = true;
  for (int x = 1; x < p && out.labels_consistent; ++x) {
    for (int z = 1; z < p && out.labels_consistent; ++z) {
      for (int a = 0; a < p; ++a) {
        if (orbit_of_vector(x, z, a) != label_orbit[x]) {
          out.labels_consistent = false;
          break;
        }
      }
    }
  }

  // Order orbits by the smallest coset index among their labels, unlabeled last.
  std::vector<int> rank_key(orbits.size(), 1 << 20);
  for (int x = 1; x < p; ++x) {
    if (label_orbit[x] >= 0) rank_key[label_orbit[x]] = std::min(rank_key[label_orbit[x]], coset_index(field(x)));
  }
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return rank_key[a] < rank_key[b]; });
  std::vector<int> new_id(orbits.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    new_id[perm[k]] = static_cast<int>(k);
    out.orbits.push_back(std::move(orbits[perm[k]]));
  }
  out.x_labels.assign(out.orbits.size(), {});
  for (int x = 1; x < p; ++x) {
    if (label_orbit[x] >= 0) out.x_labels[new_id[label_orbit[x]]].push_back(x);
  }

  out.coset_rule_holds = true;
  for (int a = 1; a < p && out.coset_rule_holds; ++a) {
    for (int c = 0; c < p && out.coset_rule_holds; ++c) {
      const SymplecticMatrix g(field(a), field.zero(), field(c), inverse(field(a)));
      const Operator u = symplectic_unitary(g);
      for (int x = 1; x < p; ++x) {
        const FieldScalar target = field(x) / field(a).pow(3);
        if (coset_index(target) != coset_index(field(x)) ||
            !equal_up_to_phase(Operator(u * magic_power(field, x) * u.adjoint()), magic_power(field, target.value()))) {
          out.coset_rule_holds = false;
          break;
        }
      }
    }
  }

  out.matches_cosets = true;
  for (int x = 1; x < p; ++x) {
    for (int y = 1; y < p; ++y) {
      const bool same_orbit = label_orbit[x] == label_orbit[y] && label_orbit[x] >= 0;
      if (same_orbit != (coset_index(field(x)) == coset_index(field(y)))) out.matches_cosets = false;
    }
  }
  return out;
}

}  // namespace zkit
