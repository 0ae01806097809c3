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

#ifndef INVIS_COLORIMETRY_H_
#define INVIS_COLORIMETRY_H_

#include <span>
#include <string>
#include <vector>

#include "invis/linalg_core.h"

namespace invis::color {

// Strictly increasing wavelengths in nanometres, at least two samples, all in
// (0, 1e4).
class SpectrumGrid {
 public:
  explicit SpectrumGrid(std::vector<double> wavelengths_nm);
  // Uniform grid lo, lo + step, ..., up to and including hi (within step/2).
  static SpectrumGrid uniform(double lo_nm, double hi_nm, double step_nm);

  std::size_t size() const { return nm_.size(); }
  std::span<const double> wavelengths() const { return nm_; }

  friend bool operator==(const SpectrumGrid&, const SpectrumGrid&) = default;

 private:
  std::vector<double> nm_;
};

// A named family of nonnegative sampled functions on a shared grid. Each
// function has at least one strictly positive sample.
class SampledSpectra {
 public:
  SampledSpectra(SpectrumGrid grid, std::vector<std::string> names,
                 std::vector<std::vector<double>> samples);

  const SpectrumGrid& grid() const { return grid_; }
  std::size_t count() const { return samples_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::span<const double> samples(std::size_t i) const { return samples_[i]; }

 private:
  SpectrumGrid grid_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> samples_;
};

// Receptor sensitivities c_a(lambda).
class ReceptorBank : public SampledSpectra {
 public:
  using SampledSpectra::SampledSpectra;
};

// Illuminant intensity spectra I_k(lambda).
class IlluminantBank : public SampledSpectra {
 public:
  using SampledSpectra::SampledSpectra;
};

// Brightness multipliers b_k, one per illuminant. Entries may be negative.
struct IlluminationVector {
  std::vector<double> weights;

  bool is_physical() const;
  std::size_t size() const { return weights.size(); }
};

struct MetamerFamily {
  IlluminationVector base;
  IlluminationVector direction;
  FeasibleInterval lambda_range;

  IlluminationVector member(double lambda) const;
};

struct NamedBank {
  std::string name;
  ReceptorBank bank;
};

// distinguishes[i][j]: bank j can tell apart the members of bank i's metamer
// family. contrast[i][j] = |M_j d_i| / (|M_j| |d_i|), the response to bank i's
// invisible direction relative to bank j's overall gain.
struct DiscriminationTable {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> distinguishes;
  std::vector<std::vector<double>> contrast;

  double off_diagonal_true_fraction() const;
};

// Entry (a, k) = trapezoid integral of c_a * I_k over the shared grid.
RealMatrix response_matrix(const ReceptorBank& receptors, const IlluminantBank& illuminants);

KernelBasis metamer_space(const RealMatrix& response, const Tolerance& tol = {});

bool indistinguishable(const RealMatrix& response, const IlluminationVector& b1,
                       const IlluminationVector& b2, const Tolerance& tol = {});
bool indistinguishable(const ReceptorBank& receptors, const IlluminantBank& illuminants,
                       const IlluminationVector& b1, const IlluminationVector& b2,
                       const Tolerance& tol = {});

// Requires a strictly positive base and a one-dimensional metamer space.
MetamerFamily metamer_family(const ReceptorBank& receptors, const IlluminantBank& illuminants,
                             const IlluminationVector& base, const Tolerance& tol = {});

DiscriminationTable discrimination_table(std::span<const NamedBank> banks,
                                         const IlluminantBank& illuminants,
                                         const IlluminationVector& base,
                                         const Tolerance& tol = {});

// Built-in synthetic fixtures.

struct Band {
  std::string name;
  double peak_nm;
  double sigma_nm;
};

enum class Observer { kNormal, kSPrime, kMPrime, kLPrime };

std::string_view observer_name(Observer observer);

// 380..780 nm at 1 nm.
SpectrumGrid default_grid();

// exp(-(ln(l / peak))^2 / (2 s^2)) with s = sigma / peak, so the width near the
// peak matches a linear Gaussian of standard deviation sigma.
ReceptorBank log_gaussian_receptors(const SpectrumGrid& grid, std::span<const Band> bands);

// exp(-(l - peak)^2 / (2 sigma^2)).
IlluminantBank gaussian_illuminants(const SpectrumGrid& grid, std::span<const Band> bands);

std::vector<Band> observer_bands(Observer observer);
std::vector<Band> led_bands();

ReceptorBank builtin_receptors(Observer observer);
IlluminantBank builtin_leds();

}  // namespace invis::color

#endif  // INVIS_COLORIMETRY_H_
