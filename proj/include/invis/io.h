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

#ifndef INVIS_IO_H_
#define INVIS_IO_H_

// File formats and JSON encodings.
//
//   spectra CSV   header `wavelength_nm,<name1>,<name2>,...`, one row per sample
//   body CSV      header `mass,x,y,z`, one row per point
//   operator JSON array of rows; entries are numbers or [re, im] pairs
//   suite JSON    array of operators
//   record JSON   {"observables": [...], "values": [...]} (+ optional "dim")
//
// Emitted JSON prints every floating-point number with 17 significant digits
// and encodes infinite interval ends as the strings "-inf" / "+inf".

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "invis/colorimetry.h"
#include "invis/linalg_core.h"
#include "invis/quantum_greybox.h"
#include "invis/rigid_body.h"

namespace invis::io {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);
Json read_json_file(const std::filesystem::path& path);

// %.17g, with -0 printed as 0.
std::string format_number(double value);
// Pretty-printed document with a trailing newline.
std::string dump(const Json& doc);

struct SpectraTable {
  std::vector<double> wavelengths_nm;
  std::vector<std::string> names;
  std::vector<std::vector<double>> samples;
};

SpectraTable parse_spectra_csv(std::string_view text);
std::string spectra_csv(const color::SampledSpectra& spectra);
color::ReceptorBank read_receptors(const std::filesystem::path& path);
color::IlluminantBank read_illuminants(const std::filesystem::path& path);

body::PointMassSet parse_body_csv(std::string_view text);
std::string body_csv(const body::PointMassSet& body);
body::PointMassSet read_body(const std::filesystem::path& path);

// Comma-separated reals, e.g. "1,0.5,2".
std::vector<double> parse_real_list(std::string_view text);

quantum::HermitianOperator operator_from_json(const Json& doc);
Json operator_to_json(const quantum::HermitianOperator& op);
std::vector<quantum::HermitianOperator> suite_from_json(const Json& doc);
quantum::MeasurementRecord record_from_json(const Json& doc);
Json record_to_json(const quantum::MeasurementRecord& record);

Json interval_to_json(const FeasibleInterval& interval);
FeasibleInterval interval_from_json(const Json& doc);
Json matrix_to_json(const Eigen::MatrixXd& m);
Json vector_to_json(const Eigen::VectorXd& v);
Json body_to_json(const body::PointMassSet& body);
Json summary_to_json(const body::MechanicalSummary& s);

}  // namespace invis::io

#endif  // INVIS_IO_H_
