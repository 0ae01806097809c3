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

#include "invis/colorimetry.h"

#include <cmath>
#include <string>

#include "invis/error.h"
#include "invis/kernels.h"

namespace invis::color {
namespace {

Eigen::VectorXd to_eigen(const IlluminationVector& b) {
  return Eigen::Map<const Eigen::VectorXd>(b.weights.data(), static_cast<Eigen::Index>(b.size()));
}

void require_length(const IlluminationVector& b, std::size_t n, const char* what) {
  if (b.size() != n) {
    throw_invalid(std::string(what) + " has " + std::to_string(b.size()) + " weights, expected " +
                  std::to_string(n));
  }
  for (double w : b.weights) {
    if (!std::isfinite(w)) throw_invalid(std::string(what) + " has a non-finite weight");
  }
}

void require_strictly_positive(const IlluminationVector& base) {
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (!(base.weights[k] > 0.0)) {
      throw_invalid("base weight " + std::to_string(k) + " is not strictly positive");
    }
  }
}

Eigen::VectorXd one_dimensional_direction(const RealMatrix& response, const Tolerance& tol,
                                          const std::string& label) {
  KernelBasis basis = metamer_space(response, tol);
  if (basis.dim() != 1) {
    throw Error(ErrorKind::kUnsupportedDimension,
                label + " metamer space has dimension " + std::to_string(basis.dim()) +
                    ", expected 1",
                "one_dimensional_metamer_space");
  }
  return basis.vectors.front();
}

}  // namespace

SpectrumGrid::SpectrumGrid(std::vector<double> wavelengths_nm) : nm_(std::move(wavelengths_nm)) {
  if (nm_.size() < 2) throw_invalid("spectrum grid needs at least two samples");
  for (std::size_t i = 0; i < nm_.size(); ++i) {
    if (!std::isfinite(nm_[i]) || nm_[i] <= 0.0 || nm_[i] >= 1e4) {
      throw_invalid("wavelength " + std::to_string(nm_[i]) + " outside (0, 1e4) nm");
    }
    if (i > 0 && !(nm_[i] > nm_[i - 1])) throw_invalid("wavelengths must be strictly increasing");
  }
}

SpectrumGrid SpectrumGrid::uniform(double lo_nm, double hi_nm, double step_nm) {
  if (!(step_nm > 0.0) || !(hi_nm > lo_nm)) throw_invalid("bad uniform grid parameters");
  const auto n = static_cast<std::size_t>(std::floor((hi_nm - lo_nm) / step_nm + 0.5)) + 1;
  std::vector<double> nm(n);
  for (std::size_t i = 0; i < n; ++i) nm[i] = lo_nm + static_cast<double>(i) * step_nm;
  return SpectrumGrid(std::move(nm));
}

SampledSpectra::SampledSpectra(SpectrumGrid grid, std::vector<std::string> names,
                               std::vector<std::vector<double>> samples)
    : grid_(std::move(grid)), names_(std::move(names)), samples_(std::move(samples)) {
  if (samples_.empty()) throw_invalid("spectral bank is empty");
  if (names_.size() != samples_.size()) throw_invalid("spectral bank names and samples differ");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (s.size() != grid_.size()) {
      throw_invalid("spectrum '" + names_[i] + "' has " + std::to_string(s.size()) +
                    " samples, grid has " + std::to_string(grid_.size()));
    }
    bool any_positive = false;
    for (double v : s) {
      if (!std::isfinite(v) || v < 0.0) {
        throw_invalid("spectrum '" + names_[i] + "' has a negative or non-finite sample");
      }
      any_positive = any_positive || v > 0.0;
    }
    if (!any_positive) throw_invalid("spectrum '" + names_[i] + "' is identically zero");
  }
}

bool IlluminationVector::is_physical() const {
  for (double w : weights) {
    if (!(w >= 0.0)) return false;
  }
  return true;
}

IlluminationVector MetamerFamily::member(double lambda) const {
  IlluminationVector out = base;
  for (std::size_t k = 0; k < out.size(); ++k) out.weights[k] += lambda * direction.weights[k];
  return out;
}

double DiscriminationTable::off_diagonal_true_fraction() const {
  std::size_t total = 0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < distinguishes.size(); ++i) {
    for (std::size_t j = 0; j < distinguishes[i].size(); ++j) {
      if (i == j) continue;
      ++total;
      if (distinguishes[i][j]) ++hits;
    }
  }
  return total == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(total);
}

RealMatrix response_matrix(const ReceptorBank& receptors, const IlluminantBank& illuminants) {
  if (!(receptors.grid() == illuminants.grid())) {
    throw_invalid("receptor and illuminant grids differ");
  }
  const auto t = receptors.grid().wavelengths();
  Eigen::MatrixXd m(receptors.count(), illuminants.count());
  for (std::size_t a = 0; a < receptors.count(); ++a) {
    for (std::size_t k = 0; k < illuminants.count(); ++k) {
      m(a, k) = kernels::trapezoid_product(t, receptors.samples(a), illuminants.samples(k));
    }
  }
  return RealMatrix(std::move(m));
}

KernelBasis metamer_space(const RealMatrix& response, const Tolerance& tol) {
  return kernel_basis(response, tol);
}

bool indistinguishable(const RealMatrix& response, const IlluminationVector& b1,
                       const IlluminationVector& b2, const Tolerance& tol) {
  tol.validate();
  require_length(b1, response.cols(), "b1");
  require_length(b2, response.cols(), "b2");
  const Eigen::VectorXd diff = to_eigen(b1) - to_eigen(b2);
  const double residual = (response.eigen() * diff).norm();
  return residual <= tol.threshold(spectral_norm(response.eigen()) * diff.norm());
}

bool indistinguishable(const ReceptorBank& receptors, const IlluminantBank& illuminants,
                       const IlluminationVector& b1, const IlluminationVector& b2,
                       const Tolerance& tol) {
  return indistinguishable(response_matrix(receptors, illuminants), b1, b2, tol);
}

MetamerFamily metamer_family(const ReceptorBank& receptors, const IlluminantBank& illuminants,
                             const IlluminationVector& base, const Tolerance& tol) {
  tol.validate();
  require_length(base, illuminants.count(), "base");
  require_strictly_positive(base);
  const Eigen::VectorXd d =
      one_dimensional_direction(response_matrix(receptors, illuminants), tol, "receptor bank");

  MetamerFamily family;
  family.base = base;
  family.direction.weights.assign(d.data(), d.data() + d.size());
  family.lambda_range = positivity_interval(family.base.weights, family.direction.weights);
  return family;
}

DiscriminationTable discrimination_table(std::span<const NamedBank> banks,
                                         const IlluminantBank& illuminants,
                                         const IlluminationVector& base, const Tolerance& tol) {
  tol.validate();
  require_length(base, illuminants.count(), "base");
  require_strictly_positive(base);

  std::vector<Eigen::MatrixXd> responses;
  std::vector<double> norms;
  std::vector<Eigen::VectorXd> directions;
  for (const auto& named : banks) {
    RealMatrix m = response_matrix(named.bank, illuminants);
    directions.push_back(one_dimensional_direction(m, tol, "bank '" + named.name + "'"));
    norms.push_back(spectral_norm(m.eigen()));
    responses.push_back(m.eigen());
  }

  const std::size_t n = banks.size();
  DiscriminationTable table;
  table.distinguishes.assign(n, std::vector<bool>(n, false));
  table.contrast.assign(n, std::vector<double>(n, 0.0));
  for (const auto& named : banks) table.names.push_back(named.name);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double scale = norms[j] * directions[i].norm();
      const double response = (responses[j] * directions[i]).norm();
      table.contrast[i][j] = scale > 0.0 ? response / scale : 0.0;
      table.distinguishes[i][j] = i != j && response > tol.threshold(scale);
    }
  }
  return table;
}

std::string_view observer_name(Observer observer) {
  switch (observer) {
    case Observer::kNormal:
      return "normal";
    case Observer::kSPrime:
      return "s_prime";
    case Observer::kMPrime:
      return "m_prime";
    case Observer::kLPrime:
      return "l_prime";
  }
  return "unknown";
}

SpectrumGrid default_grid() { return SpectrumGrid::uniform(380.0, 780.0, 1.0); }

ReceptorBank log_gaussian_receptors(const SpectrumGrid& grid, std::span<const Band> bands) {
  std::vector<std::string> names;
  std::vector<std::vector<double>> samples;
  for (const auto& band : bands) {
    const double s = band.sigma_nm / band.peak_nm;
    std::vector<double> values;
    values.reserve(grid.size());
    for (double l : grid.wavelengths()) {
      const double u = std::log(l / band.peak_nm) / s;
      values.push_back(std::exp(-0.5 * u * u));
    }
    names.push_back(band.name);
    samples.push_back(std::move(values));
  }
  return ReceptorBank(grid, std::move(names), std::move(samples));
}

IlluminantBank gaussian_illuminants(const SpectrumGrid& grid, std::span<const Band> bands) {
  std::vector<std::string> names;
  std::vector<std::vector<double>> samples;
  for (const auto& band : bands) {
    std::vector<double> values;
    values.reserve(grid.size());
    for (double l : grid.wavelengths()) {
      const double u = (l - band.peak_nm) / band.sigma_nm;
      values.push_back(std::exp(-0.5 * u * u));
    }
    names.push_back(band.name);
    samples.push_back(std::move(values));
  }
  return IlluminantBank(grid, std::move(names), std::move(samples));
}

std::vector<Band> observer_bands(Observer observer) {
  std::vector<Band> bands = {{"S", 440.0, 30.0}, {"M", 540.0, 45.0}, {"L", 570.0, 50.0}};
  switch (observer) {
    case Observer::kNormal:
      break;
    case Observer::kSPrime:
      bands[0] = {"S'", 455.0, 30.0};
      break;
    case Observer::kMPrime:
      bands[1] = {"M'", 530.0, 45.0};
      break;
    case Observer::kLPrime:
      bands[2] = {"L'", 578.0, 50.0};
      break;
  }
  return bands;
}

std::vector<Band> led_bands() {
  return {{"led450", 450.0, 15.0}, {"led510", 510.0, 15.0}, {"led570", 570.0, 15.0},
          {"led630", 630.0, 15.0}};
}

ReceptorBank builtin_receptors(Observer observer) {
  return log_gaussian_receptors(default_grid(), observer_bands(observer));
}

IlluminantBank builtin_leds() { return gaussian_illuminants(default_grid(), led_bands()); }

}  // namespace invis::color
