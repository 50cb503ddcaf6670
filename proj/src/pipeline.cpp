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

#include "denovo/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

namespace denovo {

SpectrumResult sequence_spectrum(const Spectrum& spectrum, const PipelineConfig& config,
                                 const NodeScorer* scorer) {
  SpectrumResult result;
  result.id = spectrum.id;
  result.parent = spectrum.parent;
  try {
    const auto ranked = rank_normalize(spectrum, config.max_rank);
    auto graph = build_graph(ranked, config.ions, config.graph);
    if (scorer) {
      score_graph(graph, ranked, *scorer);
    } else {
      score_uniform(graph);
    }
    graph = remove_negative_nodes(graph);

    LagrangeOptions opts;
    opts.max_iter = config.max_iter;
    if (config.trace) {
      opts.trace = [&](const GraphView&, const TraceRecord& r) { result.trace_csv += trace_csv_row(r); };
    }
    auto best = k_best_antisymmetric_report(graph, config.k, opts);
    result.stats = best.stats;
    result.paths = best.paths.size();

    auto superset = expand_superset(graph, best.paths, config.max_expansions, config.graph.edge_tol);
    auto candidates = parent_mass_filter(std::move(superset.candidates), ranked.parent,
                                         config.psm.parent_tol);
    score_candidates(candidates, ranked, config.psm);
    result.candidates = rerank(std::move(candidates), config.n_out);
  } catch (const std::exception& e) {
    result.candidates.clear();
    result.error = e.what();
  }
  return result;
}

std::vector<SpectrumResult> sequence_all(std::span<const Spectrum> spectra,
                                         const PipelineConfig& config, const NodeScorer* scorer,
                                         unsigned threads) {
  std::vector<SpectrumResult> results(spectra.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < spectra.size(); i = next++) {
      results[i] = sequence_spectrum(spectra[i], config, scorer);
    }
  };
  const auto n = std::min<std::size_t>(std::max(threads, 1u), spectra.size());
  if (n <= 1) {
    work();
    return results;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
  pool.clear();  // joins
  return results;
}

std::string results_tsv_header() {
  return "spectrum_id\trank\tsequence\tpsm_score\tpath_score\tmass_delta\n";
}

std::string results_tsv_rows(const SpectrumResult& result) {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    const auto& c = result.candidates[i];
    const double delta = peptide_residual_mass(c.sequence) - result.parent.residual;
    out += result.id;
    std::snprintf(buf, sizeof buf, "\t%zu\t", i + 1);
    out += buf;
    out += c.sequence;
    std::snprintf(buf, sizeof buf, "\t%.4f\t%.4f\t%.4f\n", c.psm_score, c.path_score, delta);
    out += buf;
  }
  return out;
}

}  // namespace denovo
