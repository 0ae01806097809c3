// Copyright 2026 The Invisibility Authors
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

#include "invis/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "invis/error.h"

namespace invis::io {
namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorKind::kParse, message);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view s, const std::string& where) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    parse_error("cannot parse '" + std::string(s) + "' as a number (" + where + ")");
  }
  if (!std::isfinite(v)) parse_error("non-finite number (" + where + ")");
  return v;
}

// Non-empty lines, split into trimmed cells.
std::vector<std::vector<std::string_view>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  for (std::string_view line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    rows.push_back(split(line, ','));
  }
  return rows;
}

std::complex<double> complex_from_json(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  parse_error("matrix entry must be a number or a [re, im] pair");
}

template <typename Bank>
Bank read_bank(const std::filesystem::path& path) {
  SpectraTable t = parse_spectra_csv(read_text_file(path));
  return Bank(color::SpectrumGrid(std::move(t.wavelengths_nm)), std::move(t.names),
              std::move(t.samples));
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorKind::kIo, "write failed for '" + path.string() + "'");
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path.string() + "': " + e.what());
  }
}

SpectraTable parse_spectra_csv(std::string_view text) {
  const auto rows = csv_rows(text);
  if (rows.empty()) parse_error("spectra CSV is empty");
  const auto& header = rows.front();
  if (header.size() < 2 || header[0] != "wavelength_nm") {
    parse_error("spectra CSV header must be 'wavelength_nm,<name>,...'");
  }
  SpectraTable t;
  for (std::size_t c = 1; c < header.size(); ++c) t.names.emplace_back(header[c]);
  t.samples.resize(t.names.size());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string where = "line " + std::to_string(r + 1);
    if (rows[r].size() != header.size()) parse_error("wrong number of columns at " + where);
    t.wavelengths_nm.push_back(parse_real(rows[r][0], where));
    for (std::size_t c = 1; c < rows[r].size(); ++c) {
      t.samples[c - 1].push_back(parse_real(rows[r][c], where));
    }
  }
  return t;
}

std::string spectra_csv(const color::SampledSpectra& spectra) {
  std::string out = "wavelength_nm";
  for (const auto& n : spectra.names()) out += "," + n;
  out += "\n";
  const auto nm = spectra.grid().wavelengths();
  for (std::size_t i = 0; i < nm.size(); ++i) {
    out += format_number(nm[i]);
    for (std::size_t k = 0; k < spectra.count(); ++k) out += "," + format_number(spectra.samples(k)[i]);
    out += "\n";
  }
  return out;
}

color::ReceptorBank read_receptors(const std::filesystem::path& path) {
  return read_bank<color::ReceptorBank>(path);
}

color::IlluminantBank read_illuminants(const std::filesystem::path& path) {
  return read_bank<color::IlluminantBank>(path);
}

body::PointMassSet parse_body_csv(std::string_view text) {
  const auto rows = csv_rows(text);
  if (rows.empty()) parse_error("body CSV is empty");
  const auto& header = rows.front();
  if (header.size() != 4 || header[0] != "mass" || header[1] != "x" || header[2] != "y" ||
      header[3] != "z") {
    parse_error("body CSV header must be 'mass,x,y,z'");
  }
  std::vector<body::PointMass> points;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string where = "line " + std::to_string(r + 1);
    if (rows[r].size() != 4) parse_error("expected 4 columns at " + where);
    points.push_back({parse_real(rows[r][0], where),
                      {parse_real(rows[r][1], where), parse_real(rows[r][2], where),
                       parse_real(rows[r][3], where)}});
  }
  return body::PointMassSet(std::move(points));
}

std::string body_csv(const body::PointMassSet& body) {
  std::string out = "mass,x,y,z\n";
  for (const auto& p : body.points()) {
    out += format_number(p.mass) + "," + format_number(p.position.x()) + "," +
           format_number(p.position.y()) + "," + format_number(p.position.z()) + "\n";
  }
  return out;
}

body::PointMassSet read_body(const std::filesystem::path& path) {
  return parse_body_csv(read_text_file(path));
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view cell : split(text, ',')) out.push_back(parse_real(cell, "list"));
  return out;
}

quantum::HermitianOperator operator_from_json(const Json& doc) {
  if (!doc.is_array() || doc.empty()) parse_error("operator must be a nonempty array of rows");
  const std::size_t d = doc.size();
  quantum::ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!doc[i].is_array() || doc[i].size() != d) parse_error("operator must be square");
    for (std::size_t j = 0; j < d; ++j) m(i, j) = complex_from_json(doc[i][j]);
  }
  return quantum::HermitianOperator(m);
}

Json operator_to_json(const quantum::HermitianOperator& op) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < op.matrix().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < op.matrix().cols(); ++j) {
      const auto z = op.matrix()(i, j);
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<quantum::HermitianOperator> suite_from_json(const Json& doc) {
  if (!doc.is_array()) parse_error("observable suite must be an array of matrices");
  std::vector<quantum::HermitianOperator> out;
  for (const auto& m : doc) out.push_back(operator_from_json(m));
  return out;
}

quantum::MeasurementRecord record_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("observables") || !doc.contains("values")) {
    parse_error("record must be an object with 'observables' and 'values'");
  }
  auto observables = suite_from_json(doc["observables"]);
  if (!doc["values"].is_array()) parse_error("record 'values' must be an array");
  std::vector<double> values;
  for (const auto& v : doc["values"]) {
    if (!v.is_number()) parse_error("record values must be numbers");
    values.push_back(v.get<double>());
  }
  std::size_t dim = 0;
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) parse_error("record 'dim' must be a positive integer");
    dim = doc["dim"].get<std::size_t>();
  } else if (!observables.empty()) {
    dim = observables.front().dim();
  } else {
    parse_error("record without observables needs an explicit 'dim'");
  }
  return quantum::MeasurementRecord(dim, std::move(observables), std::move(values));
}

Json record_to_json(const quantum::MeasurementRecord& record) {
  Json doc;
  doc["dim"] = record.dim();
  Json obs = Json::array();
  for (const auto& m : record.observables()) obs.push_back(operator_to_json(m));
  doc["observables"] = std::move(obs);
  doc["values"] = record.values();
  return doc;
}

Json interval_to_json(const FeasibleInterval& interval) {
  Json doc;
  if (interval.empty) {
    doc["empty"] = true;
    return doc;
  }
  doc["lo"] = std::isinf(interval.lo) ? Json("-inf") : Json(interval.lo);
  doc["hi"] = std::isinf(interval.hi) ? Json("+inf") : Json(interval.hi);
  return doc;
}

FeasibleInterval interval_from_json(const Json& doc) {
  if (doc.is_object() && doc.value("empty", false)) return FeasibleInterval::empty_set();
  auto end = [&](const char* key, const char* inf_token, double inf) {
    if (!doc.is_object() || !doc.contains(key)) parse_error(std::string("interval lacks '") + key + "'");
    const Json& v = doc[key];
    if (v.is_string() && v.get<std::string>() == inf_token) return inf;
    if (v.is_number()) return v.get<double>();
    parse_error(std::string("bad interval end '") + key + "'");
  };
  const double inf = std::numeric_limits<double>::infinity();
  return {end("lo", "-inf", -inf), end("hi", "+inf", inf), false};
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json body_to_json(const body::PointMassSet& body) {
  Json out = Json::array();
  for (const auto& p : body.points()) {
    Json point;
    point["mass"] = p.mass;
    point["position"] = vector_to_json(p.position);
    out.push_back(std::move(point));
  }
  return out;
}

Json summary_to_json(const body::MechanicalSummary& s) {
  Json doc;
  doc["total_mass"] = s.total_mass;
  doc["center_of_mass"] = s.center_of_mass ? vector_to_json(*s.center_of_mass) : Json(nullptr);
  doc["inertia_origin"] = matrix_to_json(s.inertia_origin);
  doc["inertia_cm"] = s.inertia_cm ? matrix_to_json(*s.inertia_cm) : Json(nullptr);
  return doc;
}

}  // namespace invis::io
