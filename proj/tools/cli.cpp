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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "zkit/error.hpp"
#include "zkit/io.hpp"
#include "zkit/magic.hpp"
#include "zkit/mub.hpp"
#include "zkit/parallel.hpp"
#include "zkit/reality.hpp"
#include "zkit/sic.hpp"
#include "zkit/zauner.hpp"

namespace zkit::cli {

namespace {

std::string label_string(const ProjectivePoint& z) { return z.is_infinity() ? "inf" : std::to_string(z.value()); }

Json labels_json(const std::vector<int>& xs) { return Json(xs); }

Json basis_json(const Operator& basis) {
  Json vectors = Json::array();
  for (Eigen::Index c = 0; c < basis.cols(); ++c) vectors.push_back(io::state_to_json(basis.col(c)));
  return vectors;
}

Json provenance(const RunConfig& cfg) {
  return {{"generator", "zkit"}, {"command", cfg.command}, {"p", cfg.p}, {"seed", cfg.seed}};
}

CliffordElement conjugator_from_name(const Field& field, const std::string& name) {
  if (name == "identity") return CliffordElement::identity(field);
  if (name == "fourier") return fourier_conjugator(field);
  throw Error(ErrorCode::InvalidArgument, "unknown conjugator '" + name + "'");
}

Json incidence_json(const IncidenceReport& r, bool bitmap) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"kind", v.kind}, {"index", v.index}, {"count", v.count}, {"expected", v.expected}});
  }
  Json j = {{"m", r.m}, {"gamma", r.gamma}, {"n", r.n}, {"pi", r.pi}, {"ok", r.ok},
            {"ambiguous", r.ambiguous}, {"violations", violations}};
  if (bitmap) {
    // Row i lists alternating run lengths of 0s and 1s over the n lines, starting with 0s.
    Json rows = Json::array();
    for (const auto& lines : r.per_point) {
      std::vector<int> sorted = lines;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> runs;
      int pos = 0;
      for (std::size_t k = 0; k < sorted.size();) {
        runs.push_back(sorted[k] - pos);
        std::size_t e = k;
        while (e + 1 < sorted.size() && sorted[e + 1] == sorted[e] + 1) ++e;
        runs.push_back(sorted[e] - sorted[k] + 1);
        pos = sorted[e] + 1;
        k = e + 1;
      }
      if (pos < r.n) runs.push_back(r.n - pos);
      rows.push_back(runs);
    }
    j["bitmap"] = {{"encoding", "run-length, zeros first"}, {"columns", r.n}, {"rows", rows}};
  }
  return j;
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string mana_csv(const std::vector<ManaRow>& rows) {
  std::string s = "orbit,x_labels,size,mana,spread\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += std::to_string(i) + "," + join(rows[i].x_labels, ' ') + "," + std::to_string(rows[i].orbit_size) + "," +
         csv_number(rows[i].mana) + "," + csv_number(rows[i].spread) + "\n";
  }
  return s;
}

Json mana_rows_json(const std::vector<ManaRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"x_labels", labels_json(r.x_labels)}, {"size", r.orbit_size}, {"mana", r.mana}, {"spread", r.spread}});
  }
  return out;
}

SymplecticMatrix matrix_from_entries(const Field& field, const std::vector<int>& g) {
  if (g.size() != 4) throw Error(ErrorCode::InvalidArgument, "G needs four entries a,b,c,d");
  return SymplecticMatrix(field, g[0], g[1], g[2], g[3]);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Error(ErrorCode::InvalidArgument, "format '" + format + "' is not available for this command");
}

}  // namespace

CommandResult cmd_mub(const RunConfig& cfg, const std::string& family, int x, const std::string& conjugator) {
  require_format(cfg.format, {"json"});
  const Field field(cfg.p);
  MubFamily mub = [&] {
    if (family == "ivanovic") return ivanovic_mub(field);
    if (family == "alltop") return alltop_mub(field, field(x), conjugator_from_name(field, conjugator));
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
  }();

  const double deviation = mub_deviation(mub);
  double orthonormality = 0.0;
  for (const auto& b : mub.bases) {
    orthonormality = std::max(orthonormality, max_abs(Operator(b.adjoint() * b - Operator::Identity(b.rows(), b.cols()))));
  }
  const bool pass = static_cast<int>(mub.bases.size()) == cfg.p + 1 && deviation <= 1e-9 && orthonormality <= 1e-9;

  const auto dir = cfg.out.empty() ? std::filesystem::path("mub-" + family + "-p" + std::to_string(cfg.p)) : cfg.out;
  Json meta = provenance(cfg);
  meta["family"] = mub.family;
  meta["x"] = mub.x;
  meta["conjugator"] = io::to_json(mub.conjugator);

  Json files = Json::array();
  for (std::size_t i = 0; i < mub.bases.size(); ++i) {
    const std::string name = "basis_" + label_string(mub.labels[i]) + ".json";
    io::write_json_file(dir / name, {{"provenance", meta}, {"label", io::to_json(mub.labels[i])},
                                     {"vectors", basis_json(mub.bases[i])}});
    files.push_back(name);
  }
  Json certificate = {{"provenance", meta}, {"bases", mub.bases.size()}, {"max_deviation", deviation},
                      {"max_orthonormality_error", orthonormality}, {"pass", pass}};
  io::write_json_file(dir / "certificate.json", certificate);
  certificate["directory"] = dir.string();
  certificate["files"] = files;
  return {pass ? 0 : 1, certificate, {}};
}

CommandResult cmd_alltop(const RunConfig& cfg) {
  require_format(cfg.format, {"json"});
  const Field field(cfg.p);
  const auto enumeration = enumerate_alltop(field);
  const std::size_t expected = static_cast<std::size_t>(cfg.p) * cfg.p * (cfg.p * cfg.p - 1);
  const bool pass = enumeration.rays.size() == expected;
  Json families = Json::array();
  for (const auto& f : enumeration.transversal) families.push_back({{"x", f.x}, {"conjugator", io::to_json(f.conjugator)}});
  Json report = {{"p", cfg.p}, {"ray_count", enumeration.rays.size()}, {"expected_ray_count", expected},
                 {"transversal_size", enumeration.transversal.size()}, {"transversal", families}, {"pass", pass}};
  if (!cfg.out.empty()) {
    Json meta = provenance(cfg);
    Json rays = Json::array();
    for (const auto& r : enumeration.rays) rays.push_back(io::state_to_json(r.amplitudes()));
    io::write_json_file(cfg.out / "alltop_rays.json", {{"provenance", meta}, {"rays", rays}});
    for (std::size_t i = 0; i < enumeration.transversal.size(); ++i) {
      const auto& f = enumeration.transversal[i];
      Json bases = Json::array();
      for (std::size_t b = 0; b < f.bases.size(); ++b) {
        bases.push_back({{"label", io::to_json(f.labels[b])}, {"vectors", basis_json(f.bases[b])}});
      }
      Json m = meta;
      m["family"] = "alltop";
      m["x"] = f.x;
      m["conjugator"] = io::to_json(f.conjugator);
      io::write_json_file(cfg.out / ("family_" + std::to_string(i) + ".json"), {{"provenance", m}, {"bases", bases}});
    }
  }
  return {pass ? 0 : 1, report, {}};
}

CommandResult cmd_configurations(const RunConfig& cfg, bool bitmap) {
  require_format(cfg.format, {"json"});
  const Field field(cfg.p);
  if (!field.is_one_mod_three()) {
    throw Error(ErrorCode::WrongResidueClass, "configurations exist only for p = 1 mod 3");
  }
  if (cfg.p > 7 && !cfg.allow_slow) {
    throw Error(ErrorCode::InvalidArgument, "p > 7 runs for minutes; pass --allow-slow");
  }
  const auto lines = enumerate_zauner_subspaces(field);
  const auto ivanovic = compute_incidence(ivanovic_rays(field).rays(), lines, cfg.membership_tol);
  const auto alltop = compute_incidence(enumerate_alltop_vectors(field).rays(), lines, cfg.membership_tol);

  const int p = cfg.p;
  const int n = p * p * p * (p + 1) / 2;
  auto matches = [&](const IncidenceReport& r, int m, int gamma, int pi) {
    return r.ok && r.ambiguous == 0 && r.m == m && r.gamma == gamma && r.n == n && r.pi == pi;
  };
  const bool ivanovic_pass = matches(ivanovic, p * (p + 1), p * p, 2);
  const bool alltop_pass = matches(alltop, p * p * (p * p - 1), p, 2 * (p - 1));

  Json report = {{"p", p},
                 {"ivanovic", incidence_json(ivanovic, bitmap)},
                 {"alltop", incidence_json(alltop, bitmap)},
                 {"expected", {{"ivanovic", {p * (p + 1), p * p, n, 2}}, {"alltop", {p * p * (p * p - 1), p, n, 2 * (p - 1)}}}},
                 {"pass", ivanovic_pass && alltop_pass}};
  report["ivanovic"]["pass"] = ivanovic_pass;
  report["alltop"]["pass"] = alltop_pass;
  return {ivanovic_pass && alltop_pass ? 0 : 1, report, {}};
}

CommandResult cmd_orbits(const RunConfig& cfg) {
  require_format(cfg.format, {"json", "csv"});
  const Field field(cfg.p);
  const auto decomposition = clifford_orbits_of_alltop(field);
  const auto rows = mana_report(decomposition);
  const std::size_t expected = field.is_one_mod_three() ? 3 : 1;
  const bool pass = rows.size() == expected && decomposition.labels_consistent && decomposition.coset_rule_holds &&
                    decomposition.matches_cosets;
  Json report = {{"p", cfg.p},
                 {"ray_count", decomposition.rays.size()},
                 {"orbit_count", rows.size()},
                 {"orbits", mana_rows_json(rows)},
                 {"labels_consistent", decomposition.labels_consistent},
                 {"coset_rule_holds", decomposition.coset_rule_holds},
                 {"matches_cosets", decomposition.matches_cosets},
                 {"pass", pass}};
  return {pass ? 0 : 1, report, cfg.format == "csv" ? mana_csv(rows) : std::string{}};
}

CommandResult cmd_zauner(const RunConfig& cfg) {
  require_format(cfg.format, {"json"});
  const Field field(cfg.p);
  const auto subspaces = enumerate_zauner_subspaces(field);
  const int p = cfg.p;
  const std::size_t expected = static_cast<std::size_t>(p) * p * p * (p + 1) / 2;
  const int rank = (p - 1) / 3 + 1;
  bool ranks_ok = true;
  for (const auto& s : subspaces) ranks_ok = ranks_ok && s.rank == rank;
  const bool pass = ranks_ok && subspaces.size() == expected;
  Json report = {{"p", p}, {"count", subspaces.size()}, {"expected_count", expected}, {"rank", rank},
                 {"ranks_ok", ranks_ok}, {"pass", pass}};
  if (!cfg.out.empty()) {
    Json all = Json::array();
    for (const auto& s : subspaces) {
      all.push_back({{"source", io::to_json(s.source)}, {"rank", s.rank}, {"projector", io::operator_to_json(s.projector)}});
    }
    io::write_json_file(cfg.out, {{"provenance", provenance(cfg)}, {"subspaces", all}});
  }
  return {pass ? 0 : 1, report, {}};
}

CommandResult cmd_reality(const RunConfig& cfg) {
  require_format(cfg.format, {"json"});
  const auto r = check_real_structure(Field(cfg.p), cfg.tol);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}});
  Json report = {{"p", r.p},
                 {"checks", checks},
                 {"uak_family_distinct", r.uak_family_distinct},
                 {"real_family_distinct", r.real_family_distinct},
                 {"zauner_alltop", r.zauner_alltop},
                 {"zauner_manifestly_real", r.zauner_manifestly_real},
                 {"zauner_uak_only", r.zauner_uak_only},
                 {"zauner_neither", r.zauner_neither},
                 {"pass", r.passed()}};
  return {r.passed() ? 0 : 1, report, {}};
}

CommandResult cmd_mana(const RunConfig& cfg, const std::filesystem::path& state) {
  require_format(cfg.format, {"json", "csv"});
  const Field field(cfg.p);
  if (!state.empty()) {
    const StateVector psi = io::state_from_json(io::read_json_file(state));
    const auto rho = DensityMatrix::pure(psi, cfg.p);
    const auto w = wigner(rho);
    const double m = mana(rho);
    Json report = {{"p", cfg.p}, {"qudits", rho.qudits()}, {"state", state.string()}, {"mana", m},
                   {"negativity", w.negativity()}};
    std::string text;
    if (cfg.format == "csv") text = "state,qudits,mana,negativity\n" + state.string() + "," + std::to_string(rho.qudits()) +
                                    "," + csv_number(m) + "," + csv_number(w.negativity()) + "\n";
    return {0, report, text};
  }
  const auto rows = mana_report(field);
  Json report = {{"p", cfg.p}, {"orbits", mana_rows_json(rows)}};
  return {0, report, cfg.format == "csv" ? mana_csv(rows) : std::string{}};
}

CommandResult cmd_maximize_mana(const RunConfig& cfg, int restarts, int iterations) {
  require_format(cfg.format, {"json"});
  const auto best = maximize_mana(Field(cfg.p), restarts, iterations, cfg.seed);
  Json report = {{"p", cfg.p}, {"restarts", restarts}, {"iterations", iterations}, {"seed", cfg.seed},
                 {"mana", best.mana}, {"state", io::state_to_json(best.state.amplitudes())}};
  if (!cfg.out.empty()) io::write_json_file(cfg.out, io::state_to_json(best.state.amplitudes()));
  return {0, report, {}};
}

CommandResult cmd_sic_verify(const RunConfig& cfg, const std::filesystem::path& fiducial) {
  require_format(cfg.format, {"json"});
  const auto psi = load_fiducial(fiducial, cfg.p);
  const auto sic = verify_sic(psi);
  const auto subspaces = Field(cfg.p).is_one_mod_three() ? fiducial_zauner_check(psi) : std::vector<std::size_t>{};
  Json report = {{"p", cfg.p}, {"label", psi.label}, {"pass", sic.pass}, {"max_deviation", sic.max_deviation},
                 {"zauner_subspace_count", subspaces.size()}, {"mana", sic_mana(psi)}};
  return {sic.pass ? 0 : 1, report, {}};
}

std::string mobius_dot(int p, const std::vector<int>& g) {
  const Field field(p);
  const auto m = matrix_from_entries(field, g);
  const auto fixed = fixed_points(m);
  std::ostringstream s;
  s << "digraph mobius {\n  label=\"z -> (" << g[0] << "z+" << g[1] << ")/(" << g[2] << "z+" << g[3] << ") mod " << p
    << "\";\n  node [shape=circle];\n";
  for (const auto& z : projective_line(field)) {
    const bool is_fixed = std::find(fixed.begin(), fixed.end(), z) != fixed.end();
    s << "  \"" << label_string(z) << "\"" << (is_fixed ? " [style=filled, fillcolor=gold]" : "") << ";\n";
  }
  for (const auto& z : projective_line(field)) {
    s << "  \"" << label_string(z) << "\" -> \"" << label_string(mobius_apply(m, z)) << "\";\n";
  }
  s << "}\n";
  return s.str();
}

std::string mobius_svg(int p, const std::vector<int>& g) {
  const Field field(p);
  const auto m = matrix_from_entries(field, g);
  const auto fixed = fixed_points(m);
  const auto line = projective_line(field);
  const double size = 400.0, centre = size / 2, radius = 150.0, node = 16.0;
  auto at = [&](const ProjectivePoint& z) {
    const double t = 2 * std::numbers::pi * z.index() / static_cast<double>(line.size()) - std::numbers::pi / 2;
    return std::pair{centre + radius * std::cos(t), centre + radius * std::sin(t)};
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
    << size << " " << size << "\">\n"
    << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
       "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  for (const auto& z : line) {
    const auto w = mobius_apply(m, z);
    const auto [x0, y0] = at(z);
    if (w == z) {
      // Self-loop drawn outside the circle.
      const double dx = x0 - centre, dy = y0 - centre, len = std::hypot(dx, dy);
      const double ox = x0 + dx / len * 2 * node, oy = y0 + dy / len * 2 * node;
      s << "<circle cx=\"" << num(ox) << "\" cy=\"" << num(oy) << "\" r=\"" << num(node) << "\" fill=\"none\" stroke=\"black\"/>\n";
      continue;
    }
    const auto [x1, y1] = at(w);
    const double dx = x1 - x0, dy = y1 - y0, len = std::hypot(dx, dy);
    s << "<line x1=\"" << num(x0 + dx / len * node) << "\" y1=\"" << num(y0 + dy / len * node) << "\" x2=\""
      << num(x1 - dx / len * node) << "\" y2=\"" << num(y1 - dy / len * node)
      << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (const auto& z : line) {
    const bool is_fixed = std::find(fixed.begin(), fixed.end(), z) != fixed.end();
    const auto [x, y] = at(z);
    s << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(node) << "\" fill=\""
      << (is_fixed ? "gold" : "white") << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(x) << "\" y=\"" << num(y + 5) << "\" text-anchor=\"middle\" font-size=\"14\">"
      << (z.is_infinity() ? "&#8734;" : std::to_string(z.value())) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

CommandResult cmd_mobius_plot(const RunConfig& cfg, const std::vector<int>& g) {
  require_format(cfg.format, {"json", "dot", "svg"});
  const Field field(cfg.p);
  const auto m = matrix_from_entries(field, g);
  Json edges = Json::array();
  for (const auto& z : projective_line(field)) edges.push_back({io::to_json(z), io::to_json(mobius_apply(m, z))});
  Json fixed = Json::array();
  for (const auto& z : fixed_points(m)) fixed.push_back(io::to_json(z));
  Json report = {{"p", cfg.p}, {"G", io::to_json(m)}, {"order", order(m)}, {"class", to_string(classify_mobius(m))},
                 {"nodes", cfg.p + 1}, {"fixed_points", fixed}, {"edges", edges}};
  std::string text;
  if (cfg.format == "dot") text = mobius_dot(cfg.p, g);
  if (cfg.format == "svg") text = mobius_svg(cfg.p, g);
  return {0, report, text};
}

CommandResult cmd_selftest(const RunConfig& cfg) {
  require_format(cfg.format, {"json"});
  const Field field(cfg.p);
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol;
    all = all && ok;
    checks.push_back({{"name", name}, {"residual", residual}, {"passed", ok}});
  };

  double covariance = 0.0, orders = 0.0;
  for (const auto& g : enumerate_sl2(field)) {
    const Operator u = symplectic_unitary(g);
    for (const auto& q : all_phase_points(field)) {
      covariance = std::max(covariance, max_abs(Operator(u * displacement(q) * u.adjoint() - displacement(g * q))));
    }
    orders = std::max(orders, std::abs(static_cast<double>(operator_order(u, 2 * cfg.p + 2) - order(g))));
  }
  record("symplectic covariance", covariance, 1e-9);
  record("unitary order matches symplectic order", orders, 0.0);
  record("ivanovic unbiasedness", mub_deviation(ivanovic_mub(field)), 1e-9);
  record("alltop unbiasedness", mub_deviation(alltop_mub(field, field.one(), CliffordElement::identity(field))), 1e-9);

  double stabilizer = 0.0;
  const auto iv = ivanovic_rays(field);
  for (const auto& r : iv) stabilizer = std::max(stabilizer, pure_state_mana(r.amplitudes()));
  record("stabilizer states have zero mana", stabilizer, 1e-9);
  record("magic gate is third level", hierarchy_level(magic_gate(field)) == 3 ? 0.0 : 1.0, 0.0);

  Json report = {{"p", cfg.p}, {"checks", checks}, {"pass", all}};
  return {all ? 0 : 1, report, {}};
}

namespace {

void emit(const RunConfig& cfg, const CommandResult& result, std::ostream& out, bool report_to_file) {
  const std::string payload = result.text.empty() ? result.report.dump(2) + "\n" : result.text;
  if (report_to_file && !cfg.out.empty()) {
    if (cfg.out.has_parent_path()) std::filesystem::create_directories(cfg.out.parent_path());
    std::ofstream f(cfg.out);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.out.string());
    f << payload;
  }
  out << payload;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl-Heisenberg, Clifford and Zauner toolkit for prime dimensions", "zkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--p", cfg.p, "prime dimension greater than 3")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (ZKIT_THREADS takes precedence)");
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--out", cfg.out, "output file or directory");
  app.add_option("--format", cfg.format, "json, csv, dot or svg")->check(CLI::IsMember({"json", "csv", "dot", "svg"}));
  app.add_option("--tol", cfg.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--membership-tol", cfg.membership_tol, "subspace membership tolerance")->capture_default_str();
  app.add_flag("--allow-slow", cfg.allow_slow, "permit runs expected to exceed a minute");

  std::string family = "ivanovic", conjugator = "identity";
  int x = 1;
  auto* mub = app.add_subcommand("mub", "write a mutually unbiased basis family and its certificate");
  mub->add_option("--family", family)->check(CLI::IsMember({"ivanovic", "alltop"}))->capture_default_str();
  mub->add_option("--x", x, "exponent of the magic gate")->capture_default_str();
  mub->add_option("--conjugator", conjugator)->check(CLI::IsMember({"identity", "fourier"}))->capture_default_str();

  auto* alltop = app.add_subcommand("alltop", "enumerate every Alltop vector");
  bool bitmap = false;
  auto* config = app.add_subcommand("config", "certify the two Zauner configurations");
  config->add_flag("--bitmap", bitmap, "include the run-length incidence bitmap");
  auto* orbits = app.add_subcommand("orbits", "split the Alltop vectors into Clifford orbits");
  auto* zauner = app.add_subcommand("zauner", "enumerate Zauner subspaces");
  auto* reality = app.add_subcommand("reality", "check the real structure of the Alltop vectors");

  std::filesystem::path state;
  std::string report_format;
  auto* mana = app.add_subcommand("mana", "mana of the Alltop orbits or of a state file");
  mana->add_option("--state", state, "state file to score");
  mana->add_option("--report", report_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  int restarts = 200, iterations = 500;
  auto* maximize = app.add_subcommand("maximize-mana", "search for the largest single-qudit mana");
  maximize->add_option("--restarts", restarts)->capture_default_str();
  maximize->add_option("--iterations", iterations)->capture_default_str();

  std::filesystem::path fiducial;
  auto* sic = app.add_subcommand("sic", "SIC fiducial tools");
  sic->require_subcommand(1);
  auto* sic_verify = sic->add_subcommand("verify", "verify a fiducial file");
  sic_verify->add_option("--fiducial", fiducial)->required();

  std::vector<int> g{1, 0, 0, 1};
  auto* mobius = app.add_subcommand("mobius-plot", "draw z -> Gz on the projective line");
  mobius->add_option("--G", g, "entries a,b,c,d")->delimiter(',')->expected(4);

  auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");

  // Global options are accepted after the subcommand name too.
  for (auto* sub : {mub, alltop, config, orbits, zauner, reality, mana, maximize, sic, sic_verify, mobius, selftest}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (const char* env = std::getenv("ZKIT_THREADS")) {
      int n = 0;
      if (std::sscanf(env, "%d", &n) != 1 || n < 1) {
        throw Error(ErrorCode::InvalidArgument, std::string("ZKIT_THREADS must be a positive integer, got '") + env + "'");
      }
      set_thread_count(n);
    } else if (cfg.threads > 0) {
      set_thread_count(cfg.threads);
    }
    if (!report_format.empty()) cfg.format = report_format;
    Field field(cfg.p);  // validates p before dispatch
    (void)field;

    CommandResult result;
    bool report_to_file = true;
    if (*mub) {
      cfg.command = "mub";
      result = cmd_mub(cfg, family, x, conjugator);
      report_to_file = false;
    } else if (*alltop) {
      cfg.command = "alltop";
      result = cmd_alltop(cfg);
      report_to_file = false;
    } else if (*config) {
      cfg.command = "config";
      result = cmd_configurations(cfg, bitmap);
    } else if (*orbits) {
      cfg.command = "orbits";
      result = cmd_orbits(cfg);
    } else if (*zauner) {
      cfg.command = "zauner";
      result = cmd_zauner(cfg);
      report_to_file = false;
    } else if (*reality) {
      cfg.command = "reality";
      result = cmd_reality(cfg);
    } else if (*mana) {
      cfg.command = "mana";
      result = cmd_mana(cfg, state);
    } else if (*maximize) {
      cfg.command = "maximize-mana";
      result = cmd_maximize_mana(cfg, restarts, iterations);
      report_to_file = false;
    } else if (*sic_verify) {
      cfg.command = "sic verify";
      result = cmd_sic_verify(cfg, fiducial);
    } else if (*mobius) {
      cfg.command = "mobius-plot";
      result = cmd_mobius_plot(cfg, g);
    } else if (*selftest) {
      cfg.command = "selftest";
      result = cmd_selftest(cfg);
    }
    emit(cfg, result, out, report_to_file);
    return result.exit_code;
  } catch (const Error& e) {
    err << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace zkit::cli
