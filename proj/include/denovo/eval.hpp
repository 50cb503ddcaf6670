/*
Copyright 2026 The denovo Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "denovo/chem.hpp"
#include "denovo/spectrum.hpp"

namespace denovo {

inline constexpr double kResidueMatchTol = 2.5;

struct MatchCounts {
  std::size_t correct = 0;
  std::size_t predicted = 0;
  std::size_t truth = 0;
};

struct PredictionMetrics {
  double accuracy = 0.0;  // correct / predicted
  double recall = 0.0;    // correct / truth
};

/// Q and K, and I and L, share a class since their masses are not resolved.
char residue_class(char residue);

/// A predicted residue is correct when a true residue of the same class starts
/// within `tol` Da of it. True residues are consumed greedily left to right.
MatchCounts residue_match(std::string_view predicted, std::string_view truth,
                          double tol = kResidueMatchTol);
PredictionMetrics metrics(const MatchCounts& counts);

/// Highest recall (then highest accuracy) among the first k predictions.
PredictionMetrics best_in_top_k(std::span<const std::string> predictions, std::string_view truth,
                                std::size_t k);

struct SynthOptions {
  int precursor_charge = 1;
  // noise peak count as a fraction of the fragment peak count
  double noise_fraction = 0.0;
  bool isotopes = false;
  double isotope_ratio = 0.5;
  // fragment intensity = base * U(1 - jitter, 1 + jitter), per ion type in
  // order; missing entries use the last one
  std::vector<double> ion_intensity{100.0};
  double jitter = 0.3;
  // noise intensities are drawn from U(noise_min, noise_max)
  double noise_min = 1.0;
  double noise_max = 60.0;
  double min_mz = 50.0;
};

/// Fragment peaks for every cleavage site and ion type, plus optional isotope
/// children and uniform noise. Deterministic in `seed`.
Spectrum synth_spectrum(std::string_view peptide, std::span<const IonType> ion_types,
                        const SynthOptions& options, std::uint64_t seed,
                        std::string id = "synth");

}  // namespace denovo
