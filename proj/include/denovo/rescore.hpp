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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "denovo/chem.hpp"
#include "denovo/graph.hpp"
#include "denovo/path.hpp"
#include "denovo/spectrum.hpp"

namespace denovo {

struct Candidate {
  std::string sequence;
  double path_score = 0.0;
  double psm_score = 0.0;
  std::size_t path_rank = 0;  // 0-based rank of the generating path
};

/// Every ordered sequence of `residues` residues (I folded into L) whose mass
/// is within `tol` of `mass`, in lexicographic order.
std::vector<std::string> residue_combinations(double mass, int residues, double tol);

struct Superset {
  std::vector<Candidate> candidates;
  std::size_t truncated_paths = 0;
};

/// Replaces each multi-residue edge by every residue combination matching the
/// mass difference of its end nodes, taking the Cartesian product along the
/// path. At most `max_expansions` candidates are kept per path, in
/// lexicographic order of the substituted combinations.
Superset expand_superset(const SpectrumGraph& graph, std::span<const AntisymPath> paths,
                         std::size_t max_expansions = 10000, double tol = 0.5);

std::vector<Candidate> parent_mass_filter(std::vector<Candidate> candidates,
                                          const ParentMass& parent, double tol = 2.5);

enum class IsotopeClass { primary, secondary, lone };

/// Primary if an isotope child sits 1/charge Da above, secondary if a parent
/// sits 1/charge Da below (secondary wins when both hold).
IsotopeClass classify_peak(const Spectrum& spectrum, std::size_t peak, int charge,
                           double iso_tol = 0.1);

struct PsmIon {
  IonType ion;
  double weight = 0.0;
};

struct PsmParams {
  std::vector<PsmIon> ions;
  double isotope_bonus = 0.2;
  double missing_penalty = 0.5;
  double secondary_factor = 0.8;
  double witness_tol = 0.5;  // the m/z weight falls linearly to 0 here
  double iso_tol = 0.1;
  double parent_tol = 2.5;

  /// b, y 1.0; b2+, y2+ 0.5; a 0.3; neutral losses 0.2.
  static PsmParams defaults();
};

/// Sum over cleavage sites and ion types of rewards for witness peaks and
/// penalties for missing ones. C-terminal ions use the candidate's own mass.
double psm_score(std::string_view sequence, const Spectrum& spectrum, const PsmParams& params);

void score_candidates(std::vector<Candidate>& candidates, const Spectrum& spectrum,
                      const PsmParams& params);

/// One candidate per sequence, best psm_score first (then path_score, then
/// sequence), at most n_out.
std::vector<Candidate> rerank(std::vector<Candidate> candidates, std::size_t n_out);

}  // namespace denovo
