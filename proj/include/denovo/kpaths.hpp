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
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "denovo/graph.hpp"
#include "denovo/lagrange.hpp"
#include "denovo/path.hpp"

namespace denovo {

struct DeviationCandidate {
  AntisymPath path;
  std::size_t deviation_index = 0;  // position of the spur node on the parent path
  std::size_t parent_rank = 0;
};

/// Pending deviation paths ordered best first; rejects repeated node sequences.
class CandidateSet {
 public:
  /// False if a path with the same node sequence was ever inserted.
  bool push(DeviationCandidate candidate);
  DeviationCandidate pop_best();
  /// Marks a node sequence as taken without making it a candidate.
  void mark_seen(const std::vector<NodeId>& nodes) { seen_.insert(nodes); }

  bool empty() const { return pending_.empty(); }
  std::size_t size() const { return pending_.size(); }
  /// Score of the n-th best pending candidate (1-based), if there are n.
  std::optional<double> nth_score(std::size_t n) const;

 private:
  struct Order {
    bool operator()(const DeviationCandidate& a, const DeviationCandidate& b) const {
      return ranks_before(a.path, b.path);
    }
  };
  std::set<DeviationCandidate, Order> pending_;
  std::set<std::vector<NodeId>> seen_;
};

struct KBestStats {
  int spur_solves = 0;
  int aborted_solves = 0;
  int iterations = 0;
  int branches = 0;
  int max_branch_depth = 0;
};

struct KBestResult {
  std::vector<AntisymPath> paths;           // score non-increasing
  std::vector<std::size_t> deviation_index; // per path; 0 for the first
  KBestStats stats;
};

/// The k longest antisymmetric source-sink paths, via deviation paths whose
/// spurs are solved with the Lagrangian solver. Spur subproblems exclude the
/// prefix and every conflict partner of a prefix node, so concatenations stay
/// antisymmetric. Fewer than k paths means the graph has no more.
KBestResult k_best_antisymmetric_report(const SpectrumGraph& graph, std::size_t k,
                                        const LagrangeOptions& opts = {});
std::vector<AntisymPath> k_best_antisymmetric(const SpectrumGraph& graph, std::size_t k,
                                              const LagrangeOptions& opts = {});

/// Index of the last node `path` shares with the best-matching earlier path.
std::size_t deviation_node(const AntisymPath& path, std::span<const AntisymPath> previous);

}  // namespace denovo
