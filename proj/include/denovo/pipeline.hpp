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
#include <vector>

#include "denovo/chem.hpp"
#include "denovo/graph.hpp"
#include "denovo/kpaths.hpp"
#include "denovo/lagrange.hpp"
#include "denovo/rescore.hpp"
#include "denovo/scoring.hpp"
#include "denovo/spectrum.hpp"

namespace denovo {

struct PipelineConfig {
  std::vector<IonType> ions = default_ion_types();
  GraphConfig graph;
  std::size_t k = 20;
  std::size_t n_out = 10;
  int max_iter = 100;
  std::size_t max_expansions = 10000;
  PsmParams psm = PsmParams::defaults();  // parent_tol and witness_tol live here
  int max_rank = kDefaultMaxRank;
  bool trace = false;  // keep the iteration trace of each spectrum's first solve
};

struct SpectrumResult {
  std::string id;
  ParentMass parent;
  std::vector<Candidate> candidates;
  KBestStats stats;
  std::size_t paths = 0;
  std::string trace_csv;  // rows only, see trace_csv_header()
  std::string error;      // non-empty when the spectrum failed
};

/// rank_normalize, build_graph, node scores (uniform when `scorer` is null),
/// negative node removal, k best antisymmetric paths, superset expansion,
/// parent mass filter, PSM rescoring and rerank.
SpectrumResult sequence_spectrum(const Spectrum& spectrum, const PipelineConfig& config,
                                 const NodeScorer* scorer);

/// Runs sequence_spectrum over a pool of `threads` workers. Results keep the
/// input order. Failures are recorded per spectrum.
std::vector<SpectrumResult> sequence_all(std::span<const Spectrum> spectra,
                                         const PipelineConfig& config, const NodeScorer* scorer,
                                         unsigned threads);

std::string results_tsv_header();
/// `spectrum_id rank sequence psm_score path_score mass_delta`, rank 1-based.
std::string results_tsv_rows(const SpectrumResult& result);

}  // namespace denovo
