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

#include "denovo/path.hpp"

#include <stdexcept>

namespace denovo {

double path_score(const SpectrumGraph& graph, std::span<const NodeId> nodes) {
  double score = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto e = graph.find_edge(nodes[i], nodes[i + 1]);
    if (e == SpectrumGraph::npos) throw std::invalid_argument("consecutive nodes are not joined by an edge");
    score += graph.edge(e).weight;
  }
  return score;
}

std::string path_labels(const SpectrumGraph& graph, std::span<const NodeId> nodes) {
  std::string out;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto e = graph.find_edge(nodes[i], nodes[i + 1]);
    if (e == SpectrumGraph::npos) throw std::invalid_argument("consecutive nodes are not joined by an edge");
    out += graph.edge(e).label;
  }
  return out;
}

AntisymPath make_path(const SpectrumGraph& graph, std::vector<NodeId> nodes) {
  AntisymPath p;
  p.score = path_score(graph, nodes);
  p.labels = path_labels(graph, nodes);
  p.nodes = std::move(nodes);
  return p;
}

bool is_antisymmetric(const SpectrumGraph& graph, std::span<const NodeId> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (graph.in_conflict(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

bool ranks_before(const AntisymPath& a, const AntisymPath& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.nodes < b.nodes;
}

}  // namespace denovo
