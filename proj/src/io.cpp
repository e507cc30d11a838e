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

#include "zkit/io.hpp"

#include <fstream>

namespace zkit::io {

namespace {

Json complex_list(const Complex* data, Eigen::Index n) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < n; ++i) out.push_back({data[i].real(), data[i].imag()});
  return out;
}

std::vector<Complex> parse_complex_list(const Json& list, std::size_t expected) {
  if (!list.is_array() || list.size() != expected) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(expected) + " complex entries");
  }
  std::vector<Complex> out;
  out.reserve(expected);
  for (const auto& z : list) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw Error(ErrorCode::ParseError, "complex entries are [re, im] pairs");
    }
    out.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return out;
}

int parse_dim(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 1) {
    throw Error(ErrorCode::ParseError, "missing positive integer \"dim\"");
  }
  return j["dim"].get<int>();
}

}  // namespace

Json state_to_json(const StateVector& psi) {
  return {{"dim", psi.size()}, {"amplitudes", complex_list(psi.data(), psi.size())}};
}

StateVector state_from_json(const Json& j) {
  const int dim = parse_dim(j);
  if (!j.contains("amplitudes")) throw Error(ErrorCode::ParseError, "missing \"amplitudes\"");
  const auto values = parse_complex_list(j["amplitudes"], static_cast<std::size_t>(dim));
  return Eigen::Map<const StateVector>(values.data(), dim);
}

Json operator_to_json(const Operator& u) {
  const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows = u;
  return {{"dim", u.rows()}, {"entries", complex_list(rows.data(), rows.size())}};
}

Operator operator_from_json(const Json& j) {
  const int dim = parse_dim(j);
  if (!j.contains("entries")) throw Error(ErrorCode::ParseError, "missing \"entries\"");
  const auto values = parse_complex_list(j["entries"], static_cast<std::size_t>(dim) * dim);
  return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(values.data(), dim, dim);
}

Json to_json(const SymplecticMatrix& g) {
  const auto e = g.entries();
  return Json::array({e[0], e[1], e[2], e[3]});
}

Json to_json(const CliffordElement& c) {
  return {{"phase_exponent", c.phase_exponent.value()},
          {"displacement", {c.displacement.first.value(), c.displacement.second.value()}},
          {"symplectic", to_json(c.symplectic)}};
}

Json to_json(const ProjectivePoint& z) {
  if (z.is_infinity()) return "inf";
  return z.value();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace zkit::io
