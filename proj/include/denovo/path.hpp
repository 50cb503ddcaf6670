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

#include <span>
#include <string>
#include <vector>

#include "denovo/graph.hpp"

namespace denovo {

/// A source-sink node sequence with its concatenated edge labels and the sum
/// of its edge weights. The edge variables of the path ILP are implicit:
/// an edge is selected iff it joins consecutive nodes.
struct AntisymPath {
  std::vector<NodeId> nodes;
  std::string labels;
  double score = 0.0;

  friend bool operator==(const AntisymPath&, const AntisymPath&) = default;
};

/// Sum of edge weights, accumulated from the first node forward.
double path_score(const SpectrumGraph& graph, std::span<const NodeId> nodes);
std::string path_labels(const SpectrumGraph& graph, std::span<const NodeId> nodes);
AntisymPath make_path(const SpectrumGraph& graph, std::vector<NodeId> nodes);

/// No two nodes of the sequence are joined by a conflict edge.
bool is_antisymmetric(const SpectrumGraph& graph, std::span<const NodeId> nodes);

/// Score descending, then lexicographic node sequence.
bool ranks_before(const AntisymPath& a, const AntisymPath& b);

}  // namespace denovo
