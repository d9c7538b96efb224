// Copyright 2026 chancomp contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chancomp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace chancomp {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix: expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  if (cols == 0) throw InputError("matrix: empty row");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InputError("matrix: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& entry = row[static_cast<size_t>(k)];
      if (!entry.is_array() || entry.size() != 2)
        throw InputError("matrix: entries must be [re, im] pairs");
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  check_finite(m, "matrix entries");
  return m;
}

json channel_to_json(const QuantumChannel& phi) {
  json out;
  out["dim"] = phi.dim();
  json ks = json::array();
  for (const auto& k : phi.kraus()) ks.push_back(matrix_to_json(k));
  out["kraus"] = std::move(ks);
  return out;
}

QuantumChannel channel_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("kraus"))
    throw InputError("channel: fields 'dim' and 'kraus' are required");
  const int d = j["dim"].get<int>();
  std::vector<ComplexMatrix> kraus;
  for (const json& k : j["kraus"]) {
    ComplexMatrix m = matrix_from_json(k);
    if (m.rows() != d || m.cols() != d)
      throw InputError("channel: Kraus operator does not match 'dim'");
    kraus.push_back(std::move(m));
  }
  return QuantumChannel::from_kraus(kraus);
}

QuantumChannel load_channel(const std::filesystem::path& path) {
  return channel_from_json(json::parse(read_text_file(path)));
}

void save_channel(const std::filesystem::path& path, const QuantumChannel& phi) {
  write_text_file(path, channel_to_json(phi).dump(2) + "\n");
}

json resource_to_json(const ResourceSet& r) {
  json out;
  out["kind"] = r.kind == ResourceSet::Kind::Discrete ? "discrete" : "continuous";
  out["dim"] = r.dim;
  json els = json::array();
  for (const auto& e : r.elements) els.push_back(matrix_to_json(e));
  out["elements"] = std::move(els);
  return out;
}

ResourceSet resource_from_json(const json& j) {
  for (const char* field : {"kind", "dim", "elements"})
    if (!j.contains(field)) throw InputError(std::string("resource: missing field '") + field + "'");
  ResourceSet r;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "discrete")
    r.kind = ResourceSet::Kind::Discrete;
  else if (kind == "continuous")
    r.kind = ResourceSet::Kind::Continuous;
  else
    throw InputError("resource: kind must be 'discrete' or 'continuous'");
  r.dim = j["dim"].get<int>();
  for (const json& e : j["elements"]) {
    ComplexMatrix m = matrix_from_json(e);
    if (m.rows() != r.dim || m.cols() != r.dim)
      throw InputError("resource: element does not match 'dim'");
    r.elements.push_back(std::move(m));
  }
  r.validate();
  return r;
}

ResourceSet load_resource(const std::filesystem::path& path) {
  return resource_from_json(json::parse(read_text_file(path)));
}

void save_resource(const std::filesystem::path& path, const ResourceSet& r) {
  write_text_file(path, resource_to_json(r).dump(2) + "\n");
}

json estimate_to_json(const ComplexityEstimate& e) {
  json out;
  out["lower"] = e.lower;
  out["upper"] = e.upper;
  out["witness"] = matrix_to_json(e.witness);
  json certs = json::array();
  for (const auto& c : e.certificates) certs.push_back({{"name", c.name}, {"value", c.value}});
  out["certificates"] = std::move(certs);
  out["seed"] = e.seed;
  out["iterations"] = e.iterations;
  if (!e.warnings.empty()) out["warnings"] = e.warnings;
  return out;
}

void save_estimate(const std::filesystem::path& path, const ComplexityEstimate& e) {
  write_text_file(path, estimate_to_json(e).dump(2) + "\n");
}

json group_report_to_json(const GroupTable& g) {
  json out;
  out["order"] = g.elements.size();
  out["diameter"] = g.diameter;
  LengthStats stats = length_statistics(g);
  out["mean_length"] = stats.mean;
  out["histogram"] = stats.counts;
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw InputError("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace chancomp
