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

#include "invis/fixtures.h"

#include <cmath>

#include "invis/colorimetry.h"
#include "invis/error.h"
#include "invis/io.h"
#include "invis/quantum_greybox.h"
#include "invis/rigid_body.h"

namespace invis::fixtures {
namespace {

using color::Observer;

FixtureFile observer_file(Observer observer) {
  return {std::string(color::observer_name(observer)) + ".csv",
          io::spectra_csv(color::builtin_receptors(observer))};
}

FixtureFile json_file(std::string filename, const io::Json& doc) {
  return {std::move(filename), io::dump(doc)};
}

std::vector<FixtureFile> single(std::string_view name) {
  using body::PlatonicSolid;
  if (name == "normal") return {observer_file(Observer::kNormal)};
  if (name == "s-prime") return {observer_file(Observer::kSPrime)};
  if (name == "m-prime") return {observer_file(Observer::kMPrime)};
  if (name == "l-prime") return {observer_file(Observer::kLPrime)};
  if (name == "leds") return {{"leds.csv", io::spectra_csv(color::builtin_leds())}};
  if (name == "tetrahedron") {
    return {{"tetrahedron.csv", io::body_csv(body::platonic_fixture(PlatonicSolid::kTetrahedron, 1, 1))}};
  }
  if (name == "cube") {
    return {{"cube.csv", io::body_csv(body::platonic_fixture(PlatonicSolid::kCube, 1, 1))}};
  }
  if (name == "octahedron") {
    // The matched pair shares total mass 12 and inertia 24 * identity.
    return {{"octahedron.csv", io::body_csv(body::platonic_fixture(PlatonicSolid::kOctahedron, 1, 1))},
            {"octahedron_matched.csv",
             io::body_csv(body::platonic_fixture(PlatonicSolid::kOctahedron, 2, std::sqrt(3.0)))},
            {"cube_matched.csv", io::body_csv(body::platonic_fixture(PlatonicSolid::kCube, 1.5, 1))}};
  }
  if (name == "minimal-body") {
    return {{"minimal.csv", io::body_csv(body::minimal_invisible_body(1.0, 1.0, 2.0))}};
  }
  if (name == "minimal-base") {
    const body::PointMassSet base({{1.0, {0, 0, 1}}, {1.0, {0, 0, -2}}, {1.0, {0, 0, -1}}, {1.0, {0, 0, 2}}});
    return {{"minimal_base.csv", io::body_csv(base)}};
  }
  if (name == "pauli") {
    const auto s1 = quantum::pauli::sigma1();
    const auto s2 = quantum::pauli::sigma2();
    const auto s3 = quantum::pauli::sigma3();
    io::Json suite = io::Json::array(
        {io::operator_to_json(s1), io::operator_to_json(s2), io::operator_to_json(s3)});
    return {json_file("sigma1.json", io::operator_to_json(s1)),
            json_file("sigma2.json", io::operator_to_json(s2)),
            json_file("sigma3.json", io::operator_to_json(s3)),
            json_file("pauli_suite.json", suite),
            json_file("suite_sigma1.json", io::Json::array({io::operator_to_json(s1)})),
            json_file("suite_sigma3.json", io::Json::array({io::operator_to_json(s3)}))};
  }
  if (name == "qubit-v06") {
    constexpr double v = 0.6;
    quantum::ComplexMatrix rho = quantum::ComplexMatrix::Zero(2, 2);
    rho(0, 0) = (1 + v) / 2;
    rho(1, 1) = (1 - v) / 2;
    const quantum::MeasurementRecord record(2, {quantum::pauli::sigma3()}, {v});
    return {json_file("rho_v06.json", io::operator_to_json(quantum::HermitianOperator(rho))),
            json_file("record_v06.json", io::record_to_json(record))};
  }
  throw_invalid("unknown fixture '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "normal", "s-prime", "m-prime", "l-prime", "leds", "tetrahedron", "cube",
      "octahedron", "minimal-body", "minimal-base", "pauli", "qubit-v06"};
  return kNames;
}

std::vector<FixtureFile> files(std::string_view name) {
  if (name != "all") return single(name);
  std::vector<FixtureFile> out;
  for (const auto& n : names()) {
    for (auto& f : single(n)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace invis::fixtures
