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

#include "denovo/rescore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace denovo {

std::vector<std::string> residue_combinations(double mass, int residues, double tol) {
  std::vector<std::string> out;
  if (residues < 1) return out;
  auto alphabet = distinct_mass_residues();
  std::vector<Residue> sorted(alphabet.begin(), alphabet.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Residue& a, const Residue& b) { return a.symbol < b.symbol; });
  const double lightest = std::min_element(sorted.begin(), sorted.end(), [](auto& a, auto& b) {
                            return a.mono_mass < b.mono_mass;
                          })->mono_mass;
  std::string current;
  std::function<void(double)> extend = [&](double so_far) {
    const int left = residues - static_cast<int>(current.size());
    if (left == 0) {
      if (std::abs(so_far - mass) <= tol) out.push_back(current);
      return;
    }
    for (const auto& r : sorted) {
      const double next = so_far + r.mono_mass;
      if (next + (left - 1) * lightest > mass + tol) continue;
      current.push_back(r.symbol);
      extend(next);
      current.pop_back();
    }
  };
  extend(0.0);
  return out;
}

namespace {

// Odometer over the option lists, last position fastest.
bool advance(std::vector<std::size_t>& choice, const std::vector<std::vector<std::string>>& options) {
  for (std::size_t i = options.size(); i-- > 0;) {
    if (++choice[i] < options[i].size()) return true;
    choice[i] = 0;
  }
  return false;
}

}  // namespace

Superset expand_superset(const SpectrumGraph& graph, std::span<const AntisymPath> paths,
                         std::size_t max_expansions, double tol) {
  Superset result;
  for (std::size_t rank = 0; rank < paths.size(); ++rank) {
    const auto& path = paths[rank];
    // one option list per edge
    std::vector<std::vector<std::string>> options;
    bool empty = false;
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
      const auto e = graph.find_edge(path.nodes[i], path.nodes[i + 1]);
      const auto& edge = graph.edge(e);
      if (edge.residues == 1) {
        options.push_back({edge.label});
      } else {
        const double mass = graph.node(edge.to).prm - graph.node(edge.from).prm;
        options.push_back(residue_combinations(mass, edge.residues, tol));
        empty = empty || options.back().empty();
      }
    }
    if (empty) continue;

    std::vector<std::size_t> choice(options.size(), 0);
    std::size_t produced = 0;
    while (true) {
      Candidate c;
      for (std::size_t i = 0; i < options.size(); ++i) c.sequence += options[i][choice[i]];
      c.path_score = path.score;
      c.path_rank = rank;
      result.candidates.push_back(std::move(c));
      ++produced;
      if (!advance(choice, options)) break;
      if (produced == max_expansions) {
        ++result.truncated_paths;
        break;
      }
    }
  }
  return result;
}

std::vector<Candidate> parent_mass_filter(std::vector<Candidate> candidates,
                                          const ParentMass& parent, double tol) {
  std::erase_if(candidates, [&](const Candidate& c) {
    return !(std::abs(peptide_residual_mass(c.sequence) - parent.residual) <= tol);
  });
  return candidates;
}

IsotopeClass classify_peak(const Spectrum& spectrum, std::size_t peak, int charge, double iso_tol) {
  const double step = 1.0 / std::max(charge, 1);
  const double mz = spectrum.peaks[peak].mz;
  auto present = [&](double target) {
    const auto i = find_peak_index(spectrum, target, iso_tol);
    return i && *i != peak;
  };
  if (present(mz - step)) return IsotopeClass::secondary;
  if (present(mz + step)) return IsotopeClass::primary;
  return IsotopeClass::lone;
}

PsmParams PsmParams::defaults() {
  PsmParams p;
  for (auto& ion : witness_ion_types()) {
    double w = 0.2;  // neutral losses
    if (ion.name == "b" || ion.name == "y") w = 1.0;
    else if (ion.charge == 2) w = 0.5;
    else if (ion.name == "a") w = 0.3;
    p.ions.push_back({std::move(ion), w});
  }
  return p;
}

double psm_score(std::string_view sequence, const Spectrum& spectrum, const PsmParams& params) {
  const double residual = peptide_residual_mass(sequence);
  double score = 0.0;
  for (double prm : prefix_masses(sequence)) {
    for (const auto& [ion, weight] : params.ions) {
      const double mz = ion_mz(ion, prm, residual);
      const auto i = find_peak_index(spectrum, mz, params.witness_tol);
      if (!i) {
        score -= weight * params.missing_penalty;
        continue;
      }
      const double distance = std::abs(spectrum.peaks[*i].mz - mz);
      const double w = std::max(0.0, 1.0 - distance / params.witness_tol);
      const auto cls = classify_peak(spectrum, *i, ion.charge, params.iso_tol);
      score += weight * (cls == IsotopeClass::secondary ? params.secondary_factor : 1.0) * w;
      if (cls == IsotopeClass::primary) score += weight * params.isotope_bonus;
    }
  }
  return score;
}

void score_candidates(std::vector<Candidate>& candidates, const Spectrum& spectrum,
                      const PsmParams& params) {
  for (auto& c : candidates) c.psm_score = psm_score(c.sequence, spectrum, params);
}

std::vector<Candidate> rerank(std::vector<Candidate> candidates, std::size_t n_out) {
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.psm_score != b.psm_score) return a.psm_score > b.psm_score;
    if (a.path_score != b.path_score) return a.path_score > b.path_score;
    if (a.sequence != b.sequence) return a.sequence < b.sequence;
    return a.path_rank < b.path_rank;
  });
  std::vector<Candidate> out;
  for (auto& c : candidates) {
    if (out.size() == n_out) break;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Candidate& o) { return o.sequence == c.sequence; });
    if (!seen) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace denovo
