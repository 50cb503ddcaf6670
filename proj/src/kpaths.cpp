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

#include "denovo/kpaths.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace denovo {

bool CandidateSet::push(DeviationCandidate candidate) {
  if (!seen_.insert(candidate.path.nodes).second) return false;
  pending_.insert(std::move(candidate));
  return true;
}

DeviationCandidate CandidateSet::pop_best() {
  auto node = pending_.extract(pending_.begin());
  return std::move(node.value());
}

std::optional<double> CandidateSet::nth_score(std::size_t n) const {
  if (n == 0 || pending_.size() < n) return std::nullopt;
  return std::next(pending_.begin(), static_cast<std::ptrdiff_t>(n - 1))->path.score;
}

std::size_t deviation_node(const AntisymPath& path, std::span<const AntisymPath> previous) {
  std::size_t best = 0;
  for (const auto& p : previous) {
    const auto limit = std::min(p.nodes.size(), path.nodes.size());
    std::size_t shared = 0;
    while (shared < limit && p.nodes[shared] == path.nodes[shared]) ++shared;
    assert(shared < path.nodes.size() || shared < p.nodes.size());
    if (shared > 0) best = std::max(best, shared - 1);
  }
  return best;
}

KBestResult k_best_antisymmetric_report(const SpectrumGraph& graph, std::size_t k,
                                        const LagrangeOptions& opts) {
  KBestResult result;
  if (k == 0) return result;
  const GraphView full(graph);

  auto account = [&](const SolveReport& r) {
    ++result.stats.spur_solves;
    result.stats.iterations += r.iterations;
    result.stats.branches += r.branches;
    result.stats.max_branch_depth = std::max(result.stats.max_branch_depth, r.max_branch_depth);
    if (r.aborted) ++result.stats.aborted_solves;
  };

  auto first = solve_lagrangian(full, opts);
  account(first);
  if (!first.best) return result;

  CandidateSet candidates;
  candidates.mark_seen(first.best->nodes);
  result.paths.push_back(std::move(*first.best));
  result.deviation_index.push_back(0);

  while (result.paths.size() < k) {
    const std::size_t rank = result.paths.size() - 1;
    const auto current = result.paths[rank];
    const auto& nodes = current.nodes;
    for (std::size_t j = result.deviation_index[rank]; j + 1 < nodes.size(); ++j) {
      GraphView view = full;
      view.set_source(nodes[j]);
      const auto prefix = std::span<const NodeId>(nodes).first(j + 1);
      for (const auto& earlier : result.paths) {
        if (earlier.nodes.size() > j + 1 && std::equal(prefix.begin(), prefix.end(), earlier.nodes.begin())) {
          view.deactivate_edge(graph.find_edge(nodes[j], earlier.nodes[j + 1]));
        }
      }
      for (std::size_t i = 0; i <= j; ++i) {
        if (i < j) view.deactivate_node(prefix[i]);
        for (auto c : graph.conflicts_of(prefix[i])) view.deactivate_node(graph.conflict_partner(c, prefix[i]));
      }

      const double prefix_score = path_score(graph, prefix);
      LagrangeOptions spur_opts = opts;
      spur_opts.trace = nullptr;
      spur_opts.abort_bound.reset();
      const auto need = k - result.paths.size();
      if (auto cutoff = candidates.nth_score(need)) spur_opts.abort_bound = *cutoff - prefix_score;

      auto spur = solve_lagrangian(view, spur_opts);
      account(spur);
      if (!spur.best || spur.aborted) continue;

      std::vector<NodeId> joined(prefix.begin(), prefix.end());
      joined.insert(joined.end(), spur.best->nodes.begin() + 1, spur.best->nodes.end());
      candidates.push({make_path(graph, std::move(joined)), j, rank});
    }
    if (candidates.empty()) break;
    auto next = candidates.pop_best();
    result.paths.push_back(std::move(next.path));
    result.deviation_index.push_back(next.deviation_index);
  }
  return result;
}

std::vector<AntisymPath> k_best_antisymmetric(const SpectrumGraph& graph, std::size_t k,
                                              const LagrangeOptions& opts) {
  return std::move(k_best_antisymmetric_report(graph, k, opts).paths);
}

}  // namespace denovo
