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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "denovo/graph.hpp"
#include "denovo/path.hpp"

namespace denovo {

struct LongestPath {
  std::vector<NodeId> nodes;
  double score = 0.0;
};

/// Maximum-weight source-sink path of the view in one pass over node ids.
/// `weights` is indexed by edge index. Among equal-valued predecessors the one
/// with the smaller id wins. Throws NoFeasiblePath if the sink is unreachable.
LongestPath dag_longest_path(const GraphView& view, std::span<const double> weights);
std::optional<LongestPath> try_dag_longest_path(const GraphView& view, std::span<const double> weights);

struct RelaxedWeights {
  std::vector<double> weights;  // per edge index
  double constant = 0.0;        // sum of multipliers over active conflicts
};

/// Edge weights of the Lagrangian problem: every edge leaving v loses the
/// multipliers of all active conflict edges incident to v. `lambda` is indexed
/// by conflict index.
RelaxedWeights relaxed_weights(const GraphView& view, std::span<const double> lambda);

/// One subgradient iteration as seen by a trace consumer.
struct TraceRecord {
  int depth = 0;            // branch-and-bound depth of the subproblem
  int iteration = 0;        // global iteration counter across the whole solve
  double bound = 0.0;       // Z(lambda^t)
  std::optional<double> incumbent;
  double theta = 0.0;       // step size used for the following update
  std::size_t violated = 0; // conflict edges with both ends on the path
  std::span<const double> lambda;  // multipliers after the update; valid during the callback
};

using TraceFn = std::function<void(const GraphView&, const TraceRecord&)>;

struct LagrangeOptions {
  int max_iter = 100;  // per subproblem, before branching
  double tol = 1e-6;
  /// Stop as soon as the bound drops strictly below this value.
  std::optional<double> abort_bound;
  /// Score already attained elsewhere; the solve stops once it cannot beat it.
  std::optional<double> lower_bound;
  double gamma0 = 2.0;
  int gamma_patience = 5;  // halve gamma after this many iterations without bound progress
  int max_branch_depth = 64;
  TraceFn trace;
};

struct SolveReport {
  std::optional<AntisymPath> best;
  double bound = 0.0;  // best upper bound on the view's optimum
  int iterations = 0;
  int branches = 0;
  int max_branch_depth = 0;
  bool converged = false;
  bool aborted = false;  // stopped on abort_bound; `best` may be suboptimal or empty
};

/// Longest antisymmetric path of the view by subgradient optimisation of the
/// Lagrangian dual, branching on a conflicted node when the dual does not
/// close within max_iter. `best` is empty when the view has no antisymmetric
/// path (or when the solve aborted first).
SolveReport solve_lagrangian(const GraphView& view, const LagrangeOptions& opts = {});

/// Like solve_lagrangian but throws NoFeasiblePath instead of returning empty.
AntisymPath longest_antisymmetric_path(const GraphView& view, const LagrangeOptions& opts = {});

std::string trace_csv_header();
std::string trace_csv_row(const TraceRecord& record);

}  // namespace denovo
