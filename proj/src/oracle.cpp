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

#include "denovo/oracle.hpp"

#include <algorithm>
#include <set>

#include "denovo/errors.hpp"

namespace denovo {

namespace {

// Calls `visit(nodes, score, feasible)` for every path; returns false if
// enumeration stopped at `limit`.
template <class Visit>
bool for_each_path(const GraphView& view, std::size_t limit, Visit&& visit) {
  const auto& g = view.graph();
  if (!view.node_active(view.source()) || !view.node_active(view.sink())) return true;

  std::vector<NodeId> stack{view.source()};
  std::vector<double> prefix_score{0.0};
  std::vector<std::size_t> next_edge{g.out_begin(view.source())};
  std::size_t count = 0;

  auto feasible = [&](const std::vector<NodeId>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (g.in_conflict(nodes[i], nodes[j])) return false;
      }
    }
    for (NodeId f : view.forced()) {
      if (std::find(nodes.begin(), nodes.end(), f) == nodes.end()) return false;
    }
    return true;
  };

  while (!stack.empty()) {
    const NodeId v = stack.back();
    if (v == view.sink()) {
      if (count == limit) return false;
      ++count;
      visit(stack, prefix_score.back(), feasible(stack));
      stack.pop_back();
      prefix_score.pop_back();
      next_edge.pop_back();
      continue;
    }
    auto& e = next_edge.back();
    while (e < g.out_end(v) && !view.edge_active(e)) ++e;
    if (e == g.out_end(v)) {
      stack.pop_back();
      prefix_score.pop_back();
      next_edge.pop_back();
      continue;
    }
    const auto& edge = g.edge(e++);
    const double score = prefix_score.back() + edge.weight;
    stack.push_back(edge.to);
    prefix_score.push_back(score);
    next_edge.push_back(g.out_begin(edge.to));
  }
  return true;
}

}  // namespace

Enumeration enumerate_paths(const GraphView& view, std::size_t limit) {
  Enumeration out;
  const auto& g = view.graph();
  out.truncated = !for_each_path(view, limit, [&](const std::vector<NodeId>& nodes, double score, bool ok) {
    out.paths.push_back({{nodes, path_labels(g, nodes), score}, ok});
  });
  return out;
}

Enumeration enumerate_paths(const SpectrumGraph& graph, std::size_t limit) {
  return enumerate_paths(GraphView(graph), limit);
}

std::vector<AntisymPath> exact_k_best(const GraphView& view, std::size_t k, std::size_t limit) {
  auto order = [](const AntisymPath& a, const AntisymPath& b) { return ranks_before(a, b); };
  std::set<AntisymPath, decltype(order)> best(order);
  const bool complete = for_each_path(view, limit, [&](const std::vector<NodeId>& nodes, double score, bool ok) {
    if (!ok || k == 0) return;
    AntisymPath p{nodes, {}, score};
    if (best.size() == k) {
      if (!ranks_before(p, *std::prev(best.end()))) return;
      best.erase(std::prev(best.end()));
    }
    best.insert(std::move(p));
  });
  if (!complete) throw LimitExceeded("more than " + std::to_string(limit) + " paths");
  std::vector<AntisymPath> out(best.begin(), best.end());
  for (auto& p : out) p.labels = path_labels(view.graph(), p.nodes);
  return out;
}

std::vector<AntisymPath> exact_k_best(const SpectrumGraph& graph, std::size_t k, std::size_t limit) {
  return exact_k_best(GraphView(graph), k, limit);
}

std::optional<AntisymPath> exact_best(const GraphView& view, std::size_t limit) {
  auto top = exact_k_best(view, 1, limit);
  if (top.empty()) return std::nullopt;
  return std::move(top.front());
}

}  // namespace denovo
