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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "denovo/chem.hpp"
#include "denovo/graph.hpp"
#include "denovo/spectrum.hpp"

namespace denovo {

// Intensity observation of a witness: 0 absent, 1 for ranks 1-3, 2 for ranks
// 4-10, 3 beyond.
inline constexpr int kIntensityBins = 4;
int intensity_bin(int rank);

/// Region r of R equal-width regions with x / extent in [r/R, (r+1)/R);
/// x == extent falls into the last region.
int region_of(double x, double extent, int regions);

/// Discrete Bayesian network. Variable 0 is the binary class (1 = true PRM);
/// the others are witness intensities with kIntensityBins states. CPT rows
/// are indexed by the mixed-radix parent configuration, parents in listed
/// order with the first parent most significant.
struct BayesNet {
  std::vector<std::string> names;
  std::vector<int> cardinality;
  std::vector<std::vector<std::size_t>> parents;
  std::vector<std::vector<double>> cpt;  // cpt[v][config * card + value]

  std::size_t size() const { return names.size(); }
  std::size_t configurations(std::size_t v) const;
  std::size_t configuration(std::size_t v, std::span<const int> assignment) const;
  double probability(std::size_t v, std::span<const int> assignment) const;
};

struct LabeledVector {
  std::vector<int> values;  // one bin per candidate ion type
  bool positive = false;
};

/// Class first, then the given variables; every witness variable gets the
/// class as its first parent.
BayesNet naive_structure(std::vector<std::string> witness_names);

/// K2 (Bayesian-Dirichlet, all pseudo-counts 1) log score of variable v's
/// family over `data`, where data rows are full assignments including the class.
double k2_family_score(const BayesNet& net, std::size_t v, std::span<const std::vector<int>> data);

/// Greedy K2 search: for each witness variable in order, add the predecessor
/// that most improves the family score until none does or `max_parents`
/// (class included) is reached.
BayesNet learn_structure(const BayesNet& initial, std::span<const std::vector<int>> data,
                         int max_parents = 2);

/// Laplace (add-one) smoothed conditional probability tables.
BayesNet fit_cpts(BayesNet structure, std::span<const std::vector<int>> data);

bool is_acyclic(const BayesNet& net);

/// log Pr(x | class = T) - log Pr(x | class = F) for witness bins x (one per
/// witness variable, in variable order).
double log_likelihood_ratio(const BayesNet& net, std::span<const int> witnesses);

/// User topology: one `parent child` pair per line, `class` names the class
/// variable, '#' starts a comment.
using Topology = std::vector<std::pair<std::string, std::string>>;
Topology parse_topology(std::istream& in);
Topology load_topology(const std::string& path);
/// Structure from a user topology over the given witness names. Edges naming
/// witness types absent from `witness_names` are dropped.
BayesNet structure_from_topology(const Topology& topology, std::vector<std::string> witness_names);

struct RegionModel {
  std::vector<IonType> ions;  // selected witness types, network variables 1..n
  BayesNet net;
};

struct ScoringModel {
  int regions = 3;
  double threshold = 20.0;  // percent of true positives a type must appear in
  double witness_tol = 0.5;
  int max_rank = kDefaultMaxRank;
  std::vector<RegionModel> region_models;
  // rank score tables: rank_scores[region][rank - 1][ion] over rank_ions, ranks
  // 1..max_rank + 1
  std::vector<IonType> rank_ions;
  std::vector<std::vector<std::vector<double>>> rank_scores;
};

void write_model(std::ostream& out, const ScoringModel& model);
ScoringModel read_model(std::istream& in);
void save_model(const std::string& path, const ScoringModel& model);
ScoringModel load_model(const std::string& path);

/// Witness bins of the given ion types for a cleavage at `prm`; `spectrum`
/// must be rank normalized.
std::vector<int> witness_bins(std::span<const IonType> ions, double prm, const Spectrum& spectrum,
                              double tol);

struct AnnotatedSpectrum {
  Spectrum spectrum;
  std::string peptide;
};

struct TrainConfig {
  int regions = 3;
  double threshold = 20.0;
  double witness_tol = 0.5;
  double tp_tol = 0.5;       // node prm to true prm
  double parent_tol = 2.5;   // peptide mass to precursor
  int max_parents = 2;
  int max_rank = kDefaultMaxRank;
  std::uint64_t seed = 1;
  GraphConfig graph;
  std::optional<Topology> topology;
};

struct TrainingSet {
  std::vector<IonType> candidates;                   // witness types of every vector
  std::vector<std::vector<LabeledVector>> regions;   // per region
  std::size_t skipped = 0;     // spectra whose peptide does not fit the precursor
  std::size_t imbalanced = 0;  // spectra with fewer false than true positive nodes
};

/// Candidate witness types: the standard witness set plus any construction
/// type not already in it.
std::vector<IonType> candidate_witness_types(std::span<const IonType> construction_ions);

/// True positive nodes of each spectrum graph plus as many uniformly sampled
/// false positive nodes, with their witness bins over the candidate types.
TrainingSet extract_training_vectors(std::span<const AnnotatedSpectrum> spectra,
                                     std::span<const IonType> construction_ions,
                                     const TrainConfig& config);

/// Indices of the candidate types observed in at least `threshold_percent`
/// of the true positive vectors, most frequent first.
std::vector<std::size_t> select_ion_types(std::span<const LabeledVector> vectors,
                                          double threshold_percent);

/// log P(type | rank) / P(type) from counts[rank - 1][type], whose last column
/// counts unexplained peaks. The base rate is add-one smoothed; the
/// conditional uses pseudo-counts in proportion to the base rate.
std::vector<std::vector<double>> rank_score_table(const std::vector<std::vector<double>>& counts);

/// Rank score tables from peak annotations; a peak is labeled with the first
/// candidate type that explains it within `witness_tol`.
std::vector<std::vector<std::vector<double>>> train_rank_scores(
    std::span<const AnnotatedSpectrum> spectra, std::span<const IonType> candidates,
    const TrainConfig& config);

ScoringModel train_model(std::span<const AnnotatedSpectrum> spectra,
                         std::span<const IonType> construction_ions, const TrainConfig& config);

/// Node scores of a trained model for graphs built with a fixed ion type list.
/// Construction fails with ModelError if the rank tables lack one of the types.
class NodeScorer {
 public:
  NodeScorer(const ScoringModel& model, std::span<const IonType> construction_ions);

  /// `spectrum` must be rank normalized with the model's max_rank.
  double llr(const Node& node, const Spectrum& spectrum) const;
  /// Best rank score over the node's peak interpretations.
  double rank_score(const Node& node, const Spectrum& spectrum) const;
  double node_score(const Node& node, const Spectrum& spectrum) const {
    return llr(node, spectrum) + rank_score(node, spectrum);
  }

 private:
  const ScoringModel* model_;
  std::vector<std::size_t> rank_column_;  // construction ion -> rank_ions index
};

/// Rescores every non-goalpost node; goalposts score 0.
void score_graph(SpectrumGraph& graph, const Spectrum& spectrum, const NodeScorer& scorer);
/// Every non-goalpost node scores 1.
void score_uniform(SpectrumGraph& graph);

}  // namespace denovo
