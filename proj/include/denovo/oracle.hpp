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
#include <functional>
#include <optional>
#include <vector>

#include "denovo/graph.hpp"
#include "denovo/path.hpp"

namespace denovo {

// Exhaustive reference solver: the longest antisymmetric path ILP answered by
// enumerating every source-sink path. Only meant for small graphs.

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

struct EnumeratedPath {
  AntisymPath path;
  bool feasible = false;  // conflict-free and visits every forced node
};

struct Enumeration {
  std::vector<EnumeratedPath> paths;
  bool truncated = false;
};

/// Depth-first over active edges from the view's source to its sink.
Enumeration enumerate_paths(const GraphView& view, std::size_t limit = kDefaultEnumerationLimit);
Enumeration enumerate_paths(const SpectrumGraph& graph, std::size_t limit = kDefaultEnumerationLimit);

/// Top-k feasible paths, score descending, ties by node sequence.
/// Throws LimitExceeded when the graph has more than `limit` paths.
std::vector<AntisymPath> exact_k_best(const GraphView& view, std::size_t k,
                                      std::size_t limit = kDefaultEnumerationLimit);
std::vector<AntisymPath> exact_k_best(const SpectrumGraph& graph, std::size_t k,
                                      std::size_t limit = kDefaultEnumerationLimit);

std::optional<AntisymPath> exact_best(const GraphView& view,
                                      std::size_t limit = kDefaultEnumerationLimit);

}  // namespace denovo
