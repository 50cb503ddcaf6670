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

#include "denovo/lagrange.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>

#include "denovo/errors.hpp"

namespace denovo {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> original_weights(const SpectrumGraph& g) {
  std::vector<double> w;
  w.reserve(g.edges().size());
  for (const auto& e : g.edges()) w.push_back(e.weight);
  return w;
}

bool better(const AntisymPath& a, const std::optional<AntisymPath>& b) {
  return !b || ranks_before(a, *b);
}

struct Outcome {
  std::optional<AntisymPath> best;
  double bound = kNegInf;
  bool converged = true;
  bool aborted = false;
};

class Solver {
 public:
  Solver(const LagrangeOptions& opts, const SpectrumGraph& g)
      : opts_(opts), graph_(g), original_(original_weights(g)) {}

  Outcome solve(const GraphView& view, int depth, std::optional<double> lower_bound);

  int iterations = 0;
  int branches = 0;
  int max_depth = 0;

 private:
  std::optional<AntisymPath> repair(const GraphView& view, std::vector<NodeId> nodes) const;

  const LagrangeOptions& opts_;
  const SpectrumGraph& graph_;
  std::vector<double> original_;
};

// Keeps the higher-scored side of every conflict met on the path, drops the
// partners from the view and re-solves until the longest path is antisymmetric.
std::optional<AntisymPath> Solver::repair(const GraphView& view, std::vector<NodeId> nodes) const {
  GraphView reduced = view;
  while (true) {
    std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
      const double sa = graph_.node(a).score, sb = graph_.node(b).score;
      return sa != sb ? sa > sb : a < b;
    });
    for (NodeId v : nodes) {
      if (!reduced.node_active(v)) continue;
      for (auto c : graph_.conflicts_of(v)) reduced.deactivate_node(graph_.conflict_partner(c, v));
    }
    auto lp = try_dag_longest_path(reduced, original_);
    if (!lp) return std::nullopt;
    if (is_antisymmetric(graph_, lp->nodes)) return make_path(graph_, std::move(lp->nodes));
    nodes = std::move(lp->nodes);
  }
}

Outcome Solver::solve(const GraphView& view, int depth, std::optional<double> lower_bound) {
  max_depth = std::max(max_depth, depth);
  const auto& conflicts = graph_.conflicts();
  std::vector<std::size_t> active;
  for (std::size_t c = 0; c < conflicts.size(); ++c) {
    if (view.conflict_active(c)) active.push_back(c);
  }

  std::vector<double> lambda(conflicts.size(), 0.0);
  std::vector<double> subgradient(conflicts.size(), 0.0);
  std::vector<char> on_path(graph_.node_count(), 0);
  std::optional<AntisymPath> incumbent;
  std::vector<NodeId> worst_offender;  // infeasible path of the tightest bound
  double worst_offender_bound = std::numeric_limits<double>::infinity();
  double best_bound = std::numeric_limits<double>::infinity();
  double gamma = opts_.gamma0;
  int stall = 0;
  bool tried_repair = false;

  Outcome out;
  out.converged = false;
  for (int t = 0; t < opts_.max_iter; ++t) {
    const auto relaxed = relaxed_weights(view, lambda);
    auto lp = try_dag_longest_path(view, relaxed.weights);
    ++iterations;
    if (!lp) {
      // sink unreachable: nothing in this view, feasible or not
      out.bound = kNegInf;
      out.converged = true;
      return out;
    }
    const double z = lp->score + relaxed.constant;
    const bool improved = z < best_bound;
    best_bound = std::min(best_bound, z);

    for (NodeId v : lp->nodes) on_path[v] = 1;
    const NodeId last = lp->nodes.back();
    std::size_t violated = 0;
    double sumsq = 0.0;
    for (auto c : active) {
      // a node on the path selects exactly one outgoing edge unless it is the sink
      const auto& e = conflicts[c];
      const int selected = (on_path[e.a] && e.a != last) + (on_path[e.b] && e.b != last);
      subgradient[c] = 1.0 - selected;
      sumsq += subgradient[c] * subgradient[c];
      if (selected > 1) ++violated;
    }
    for (NodeId v : lp->nodes) on_path[v] = 0;

    if (violated == 0) {
      auto path = make_path(graph_, lp->nodes);
      if (better(path, incumbent)) incumbent = std::move(path);
    } else {
      if (z <= worst_offender_bound) {
        worst_offender_bound = z;
        worst_offender = lp->nodes;
      }
      if (!incumbent && !tried_repair) {
        tried_repair = true;
        if (auto fixed = repair(view, lp->nodes)) incumbent = std::move(fixed);
      }
    }

    double floor = incumbent ? incumbent->score : kNegInf;
    if (lower_bound) floor = std::max(floor, *lower_bound);

    double theta = 0.0;
    const bool done = best_bound <= floor + opts_.tol;
    const bool abort = !done && opts_.abort_bound && best_bound < *opts_.abort_bound - opts_.tol;
    if (!done && !abort) {
      assert(sumsq > 0.0);
      if (sumsq == 0.0) break;
      double target = floor;
      if (target == kNegInf) target = z - std::max(1.0, std::abs(z));
      theta = gamma * (z - target) / sumsq;
    }
    if (!done && !abort) {
      for (auto c : active) lambda[c] = std::max(0.0, lambda[c] - theta * subgradient[c]);
    }
    if (opts_.trace) {
      opts_.trace(view, {depth, iterations - 1, z,
                         incumbent ? std::optional<double>(incumbent->score) : std::nullopt, theta,
                         violated, lambda});
    }
    if (done) {
      out.converged = true;
      break;
    }
    if (abort) {
      out.converged = true;
      out.aborted = true;
      break;
    }
    if (improved) {
      stall = 0;
    } else if (++stall >= opts_.gamma_patience) {
      gamma *= 0.5;
      stall = 0;
    }
  }

  out.best = incumbent;
  out.bound = best_bound;
  if (out.converged || worst_offender.empty() || depth >= opts_.max_branch_depth) return out;

  // branch on the highest-scored node of a violated conflict
  NodeId pivot = worst_offender.front();
  bool found = false;
  for (NodeId v : worst_offender) {
    bool conflicted = false;
    for (NodeId w : worst_offender) {
      if (w != v && graph_.in_conflict(v, w)) conflicted = true;
    }
    if (!conflicted) continue;
    const double s = graph_.node(v).score;
    if (!found || s > graph_.node(pivot).score || (s == graph_.node(pivot).score && v < pivot)) {
      pivot = v;
      found = true;
    }
  }
  assert(found);
  ++branches;

  auto child_floor = lower_bound;
  if (incumbent) child_floor = std::max(child_floor.value_or(kNegInf), incumbent->score);

  const NodeId pivot_list[] = {pivot};
  const auto forced = restrict(view, pivot_list, {});
  auto with = solve(forced, depth + 1, child_floor);
  if (with.best && (!child_floor || with.best->score > *child_floor)) child_floor = with.best->score;
  const auto forbidden = restrict(view, {}, pivot_list);
  auto without = solve(forbidden, depth + 1, child_floor);

  for (auto* child : {&with, &without}) {
    if (child->best && better(*child->best, out.best)) out.best = child->best;
  }
  out.bound = std::min(best_bound, std::max(with.bound, without.bound));
  out.converged = with.converged && without.converged;
  out.aborted = with.aborted || without.aborted;
  return out;
}

}  // namespace

std::optional<LongestPath> try_dag_longest_path(const GraphView& view, std::span<const double> weights) {
  const auto& g = view.graph();
  const auto n = g.node_count();
  const NodeId source = view.source();
  const NodeId sink = view.sink();
  if (!view.node_active(source) || !view.node_active(sink)) return std::nullopt;

  std::vector<double> dist(n, kNegInf);
  std::vector<NodeId> pred(n, 0);
  dist[source] = 0.0;
  for (NodeId u = source; u < sink; ++u) {
    if (dist[u] == kNegInf || !view.node_active(u)) continue;
    for (auto e = g.out_begin(u); e < g.out_end(u); ++e) {
      if (!view.edge_active(e)) continue;
      const NodeId v = g.edge(e).to;
      const double cand = dist[u] + weights[e];
      if (cand > dist[v]) {
        dist[v] = cand;
        pred[v] = u;
      }
    }
  }
  if (dist[sink] == kNegInf) return std::nullopt;
  LongestPath out;
  out.score = dist[sink];
  for (NodeId v = sink; v != source; v = pred[v]) out.nodes.push_back(v);
  out.nodes.push_back(source);
  std::reverse(out.nodes.begin(), out.nodes.end());
  return out;
}

LongestPath dag_longest_path(const GraphView& view, std::span<const double> weights) {
  auto lp = try_dag_longest_path(view, weights);
  if (!lp) throw NoFeasiblePath();
  return std::move(*lp);
}

RelaxedWeights relaxed_weights(const GraphView& view, std::span<const double> lambda) {
  const auto& g = view.graph();
  std::vector<double> penalty(g.node_count(), 0.0);
  RelaxedWeights out;
  const auto conflicts = g.conflicts();
  for (std::size_t c = 0; c < conflicts.size(); ++c) {
    if (!view.conflict_active(c) || lambda[c] == 0.0) continue;
    penalty[conflicts[c].a] += lambda[c];
    penalty[conflicts[c].b] += lambda[c];
    out.constant += lambda[c];
  }
  out.weights.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.weights.push_back(e.weight - penalty[e.from]);
  return out;
}

SolveReport solve_lagrangian(const GraphView& view, const LagrangeOptions& opts) {
  Solver solver(opts, view.graph());
  auto outcome = solver.solve(view, 0, opts.lower_bound);
  SolveReport report;
  report.best = std::move(outcome.best);
  report.bound = outcome.bound;
  report.iterations = solver.iterations;
  report.branches = solver.branches;
  report.max_branch_depth = solver.max_depth;
  report.converged = outcome.converged;
  report.aborted = outcome.aborted;
  return report;
}

AntisymPath longest_antisymmetric_path(const GraphView& view, const LagrangeOptions& opts) {
  auto report = solve_lagrangian(view, opts);
  if (!report.best) throw NoFeasiblePath();
  return std::move(*report.best);
}

std::string trace_csv_header() { return "t,z_lambda,z_star,theta,violated\n"; }

std::string trace_csv_row(const TraceRecord& r) {
  char buf[160];
  char star[40] = "";
  if (r.incumbent) std::snprintf(star, sizeof star, "%.9g", *r.incumbent);
  std::snprintf(buf, sizeof buf, "%d,%.9g,%s,%.9g,%zu\n", r.iteration, r.bound, star, r.theta, r.violated);
  return buf;
}

}  // namespace denovo
