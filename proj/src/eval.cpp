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

#include "denovo/eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace denovo {

char residue_class(char residue) {
  switch (residue) {
    case 'I': return 'L';
    case 'Q': return 'K';
    default: return residue;
  }
}

MatchCounts residue_match(std::string_view predicted, std::string_view truth, double tol) {
  MatchCounts counts{0, predicted.size(), truth.size()};
  std::vector<double> true_start(truth.size());
  double mass = 0.0;
  for (std::size_t j = 0; j < truth.size(); ++j) {
    true_start[j] = mass;
    mass += residue_mass(truth[j]);
  }
  std::vector<char> used(truth.size(), 0);
  mass = 0.0;
  for (char r : predicted) {
    for (std::size_t j = 0; j < truth.size(); ++j) {
      if (used[j] || residue_class(truth[j]) != residue_class(r)) continue;
      if (std::abs(true_start[j] - mass) <= tol) {
        used[j] = 1;
        ++counts.correct;
        break;
      }
    }
    mass += residue_mass(r);
  }
  return counts;
}

PredictionMetrics metrics(const MatchCounts& counts) {
  PredictionMetrics m;
  if (counts.predicted) m.accuracy = static_cast<double>(counts.correct) / counts.predicted;
  if (counts.truth) m.recall = static_cast<double>(counts.correct) / counts.truth;
  return m;
}

PredictionMetrics best_in_top_k(std::span<const std::string> predictions, std::string_view truth,
                                std::size_t k) {
  PredictionMetrics best;
  const auto n = std::min(k, predictions.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto m = metrics(residue_match(predictions[i], truth));
    if (m.recall > best.recall || (m.recall == best.recall && m.accuracy > best.accuracy)) best = m;
  }
  return best;
}

Spectrum synth_spectrum(std::string_view peptide, std::span<const IonType> ion_types,
                        const SynthOptions& options, std::uint64_t seed, std::string id) {
  Spectrum s;
  s.id = std::move(id);
  s.parent = ParentMass::from_residual(peptide_residual_mass(peptide));
  s.precursor_charge = options.precursor_charge;
  const auto prms = prefix_masses(peptide);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < ion_types.size(); ++t) {
    const auto& ion = ion_types[t];
    const double base = options.ion_intensity.empty()
                            ? 100.0
                            : options.ion_intensity[std::min(t, options.ion_intensity.size() - 1)];
    for (double prm : prms) {
      const double mz = ion_mz(ion, prm, s.parent.residual);
      const double intensity = base * (1.0 - options.jitter + 2.0 * options.jitter * unit(rng));
      s.peaks.push_back({mz, intensity, 0});
      if (options.isotopes) {
        s.peaks.push_back({mz + 1.0 / ion.charge, intensity * options.isotope_ratio, 0});
      }
    }
  }
  const auto noise = static_cast<std::size_t>(
      std::lround(options.noise_fraction * static_cast<double>(s.peaks.size())));
  const double hi = std::max(options.min_mz + 1.0, s.parent.total);
  for (std::size_t i = 0; i < noise; ++i) {
    const double mz = options.min_mz + (hi - options.min_mz) * unit(rng);
    const double intensity = options.noise_min + (options.noise_max - options.noise_min) * unit(rng);
    s.peaks.push_back({mz, intensity, 0});
  }
  std::stable_sort(s.peaks.begin(), s.peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.mz < b.mz; });
  return s;
}

}  // namespace denovo
