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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "denovo/chem.hpp"
#include "denovo/spectrum.hpp"

namespace denovo {

using NodeId = std::uint32_t;

struct NodeOrigin {
  std::size_t peak;  // index into Spectrum::peaks
  std::size_t ion;   // index into the ion type list used for construction

  friend bool operator==(const NodeOrigin&, const NodeOrigin&) = default;
};

struct Node {
  NodeId id = 0;
  double prm = 0.0;
  std::vector<NodeOrigin> origins;  // empty for the goalposts
  double score = 0.0;

  bool is_goalpost() const { return origins.empty(); }
};

struct DirectedEdge {
  NodeId from = 0;
  NodeId to = 0;
  std::string label;  // "V" for one residue, "[LR]" for an unresolved 2- or 3-mer
  int residues = 1;
  double weight = 0.0;  // score of `from`
};

struct ConflictEdge {
  NodeId a = 0;  // a < b
  NodeId b = 0;

  friend bool operator==(const ConflictEdge&, const ConflictEdge&) = default;
};

struct GraphConfig {
  double edge_tol = 0.5;
  double merge_tol = 0.3;
  int max_edge_residues = 3;  // 1 disables pair/triple edges
  bool cross_peak_complements = false;
};

struct EdgeLabel {
  std::string label;
  int residues = 0;
  double mass = 0.0;
};

/// Best residue explanation (fewest residues, then smallest error) of a mass
/// difference, or residues == 0 when nothing matches within `tol`.
EdgeLabel label_for_mass(double mass, double tol, int max_residues);

/// Extended spectrum graph. Node ids follow ascending prm, so id order is a
/// topological order; the source goalpost is node 0 and the sink is the last
/// node. Out-edges of a node are stored contiguously, sorted by target id.
class SpectrumGraph {
 public:
  SpectrumGraph() = default;

  /// Validates and indexes an explicit graph. Nodes must be sorted by prm with
  /// the goalposts first and last; ids are reassigned to positions. Edge
  /// weights are derived from node scores.
  static SpectrumGraph assemble(ParentMass parent, std::vector<Node> nodes,
                                std::vector<DirectedEdge> edges,
                                std::vector<ConflictEdge> conflicts);

  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }
  NodeId source() const { return 0; }
  NodeId sink() const { return static_cast<NodeId>(nodes_.size() - 1); }
  const ParentMass& parent() const { return parent_; }

  std::span<const DirectedEdge> edges() const { return edges_; }
  const DirectedEdge& edge(std::size_t index) const { return edges_[index]; }
  std::size_t out_begin(NodeId v) const { return out_offset_[v]; }
  std::size_t out_end(NodeId v) const { return out_offset_[v + 1]; }
  std::size_t out_degree(NodeId v) const { return out_end(v) - out_begin(v); }
  /// Index of edge (from, to), or npos.
  std::size_t find_edge(NodeId from, NodeId to) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::span<const ConflictEdge> conflicts() const { return conflicts_; }
  /// Indices into conflicts() of the conflict edges incident to v.
  std::span<const std::size_t> conflicts_of(NodeId v) const { return conflicts_of_[v]; }
  NodeId conflict_partner(std::size_t conflict, NodeId v) const {
    const auto& c = conflicts_[conflict];
    return c.a == v ? c.b : c.a;
  }
  bool in_conflict(NodeId a, NodeId b) const;

  /// Replaces the scores of all nodes and re-derives edge weights.
  void set_scores(std::span<const double> scores);

 private:
  ParentMass parent_;
  std::vector<Node> nodes_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::size_t> out_offset_;
  std::vector<ConflictEdge> conflicts_;
  std::vector<std::vector<std::size_t>> conflicts_of_;
};

SpectrumGraph build_graph(const Spectrum& spectrum, std::span<const IonType> ion_types,
                          const GraphConfig& config = {});

/// Drops every non-goalpost node with a negative score.
SpectrumGraph remove_negative_nodes(const SpectrumGraph& graph);

/// Active subset of a graph plus solver restrictions. Copies are cheap
/// enough for per-subproblem use (one flag per node and per edge).
class GraphView {
 public:
  explicit GraphView(const SpectrumGraph& graph);

  const SpectrumGraph& graph() const { return *graph_; }
  NodeId source() const { return source_; }
  NodeId sink() const { return graph_->sink(); }
  void set_source(NodeId v) { source_ = v; }

  bool node_active(NodeId v) const { return node_active_[v] != 0; }
  bool edge_active(std::size_t e) const {
    const auto& edge = graph_->edge(e);
    return edge_active_[e] != 0 && node_active(edge.from) && node_active(edge.to);
  }
  bool conflict_active(std::size_t c) const {
    const auto& edge = graph_->conflicts()[c];
    return node_active(edge.a) && node_active(edge.b);
  }
  void deactivate_node(NodeId v) { node_active_[v] = 0; }
  void deactivate_edge(std::size_t e) { edge_active_[e] = 0; }

  std::span<const NodeId> forced() const { return forced_; }
  void add_forced(NodeId v) { forced_.push_back(v); }

 private:
  const SpectrumGraph* graph_;
  NodeId source_;
  std::vector<char> node_active_;
  std::vector<char> edge_active_;
  std::vector<NodeId> forced_;
};

/// Forces every node of `forced_in` onto any path of the returned view and
/// removes `forbidden`. Forcing v removes v's conflict partners and every
/// edge jumping over v, so each remaining source-sink path visits v.
GraphView restrict(const GraphView& view, std::span<const NodeId> forced_in,
                   std::span<const NodeId> forbidden);

/// DOT rendering: nodes labeled with prm/score, conflict edges dashed.
std::string to_dot(const SpectrumGraph& graph);

}  // namespace denovo
