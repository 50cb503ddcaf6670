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

#include "denovo/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

#include "denovo/errors.hpp"

namespace denovo {

namespace {

struct Composite {
  double mass;
  int residues;
  std::string label;
};

// Every residue multiset of size 1..3 over the distinct-mass alphabet, by mass.
const std::vector<Composite>& composites() {
  static const std::vector<Composite> table = [] {
    std::vector<Composite> out;
    const auto alphabet = distinct_mass_residues();
    const auto n = alphabet.size();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back({alphabet[i].mono_mass, 1, std::string(1, alphabet[i].symbol)});
      for (std::size_t j = i; j < n; ++j) {
        std::string two{alphabet[i].symbol, alphabet[j].symbol};
        std::sort(two.begin(), two.end());
        out.push_back({alphabet[i].mono_mass + alphabet[j].mono_mass, 2, "[" + two + "]"});
        for (std::size_t k = j; k < n; ++k) {
          std::string three{alphabet[i].symbol, alphabet[j].symbol, alphabet[k].symbol};
          std::sort(three.begin(), three.end());
          out.push_back({alphabet[i].mono_mass + alphabet[j].mono_mass + alphabet[k].mono_mass,
                         3, "[" + three + "]"});
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Composite& a, const Composite& b) { return a.mass < b.mass; });
    return out;
  }();
  return table;
}

}  // namespace

EdgeLabel label_for_mass(double mass, double tol, int max_residues) {
  const auto& table = composites();
  auto it = std::lower_bound(table.begin(), table.end(), mass - tol,
                             [](const Composite& c, double v) { return c.mass < v; });
  const Composite* best = nullptr;
  for (; it != table.end() && it->mass <= mass + tol; ++it) {
    if (it->residues > max_residues) continue;
    if (!best) {
      best = &*it;
      continue;
    }
    const double err = std::abs(it->mass - mass);
    const double best_err = std::abs(best->mass - mass);
    if (std::tie(it->residues, err, it->label) < std::tie(best->residues, best_err, best->label)) {
      best = &*it;
    }
  }
  if (!best) return {};
  return {best->label, best->residues, best->mass};
}

SpectrumGraph SpectrumGraph::assemble(ParentMass parent, std::vector<Node> nodes,
                                      std::vector<DirectedEdge> edges,
                                      std::vector<ConflictEdge> conflicts) {
  if (nodes.size() < 2) throw std::invalid_argument("graph needs both goalposts");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i].id = static_cast<NodeId>(i);
    if (i > 0 && nodes[i].prm < nodes[i - 1].prm) {
      throw std::invalid_argument("nodes must be sorted by prm");
    }
  }
  const auto n = nodes.size();
  for (auto& e : edges) {
    if (e.from >= e.to || e.to >= n) throw std::invalid_argument("edge must go from lower to higher id");
  }
  std::sort(edges.begin(), edges.end(), [](const DirectedEdge& a, const DirectedEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].from == edges[i - 1].from && edges[i].to == edges[i - 1].to) {
      throw std::invalid_argument("parallel directed edges");
    }
  }
  for (auto& c : conflicts) {
    if (c.a == c.b || c.a >= n || c.b >= n) throw std::invalid_argument("bad conflict edge");
    if (c.a > c.b) std::swap(c.a, c.b);
  }
  std::sort(conflicts.begin(), conflicts.end(),
            [](const ConflictEdge& x, const ConflictEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  conflicts.erase(std::unique(conflicts.begin(), conflicts.end()), conflicts.end());

  SpectrumGraph g;
  g.parent_ = parent;
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  g.conflicts_ = std::move(conflicts);
  g.out_offset_.assign(n + 1, 0);
  for (const auto& e : g.edges_) ++g.out_offset_[e.from + 1];
  for (std::size_t i = 0; i < n; ++i) g.out_offset_[i + 1] += g.out_offset_[i];
  g.conflicts_of_.assign(n, {});
  for (std::size_t c = 0; c < g.conflicts_.size(); ++c) {
    g.conflicts_of_[g.conflicts_[c].a].push_back(c);
    g.conflicts_of_[g.conflicts_[c].b].push_back(c);
  }
  for (auto& e : g.edges_) e.weight = g.nodes_[e.from].score;
  return g;
}

std::size_t SpectrumGraph::find_edge(NodeId from, NodeId to) const {
  const auto first = edges_.begin() + static_cast<std::ptrdiff_t>(out_begin(from));
  const auto last = edges_.begin() + static_cast<std::ptrdiff_t>(out_end(from));
  auto it = std::lower_bound(first, last, to, [](const DirectedEdge& e, NodeId v) { return e.to < v; });
  if (it == last || it->to != to) return npos;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool SpectrumGraph::in_conflict(NodeId a, NodeId b) const {
  for (auto c : conflicts_of_[a]) {
    if (conflict_partner(c, a) == b) return true;
  }
  return false;
}

void SpectrumGraph::set_scores(std::span<const double> scores) {
  assert(scores.size() == nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) nodes_[i].score = scores[i];
  for (auto& e : edges_) e.weight = nodes_[e.from].score;
}

SpectrumGraph build_graph(const Spectrum& spectrum, std::span<const IonType> ion_types,
                          const GraphConfig& config) {
  const auto& parent = spectrum.parent;
  if (!(parent.residual > 0.0)) throw InvalidParentMass("residual mass must be positive");

  struct Raw {
    double prm;
    NodeOrigin origin;
  };
  std::vector<Raw> raw;
  for (std::size_t p = 0; p < spectrum.peaks.size(); ++p) {
    for (const auto& interp : node_masses_for_peak(spectrum.peaks[p].mz, parent, ion_types).kept) {
      raw.push_back({interp.prm, {p, interp.ion_index}});
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.prm < b.prm; });

  std::vector<Node> nodes;
  nodes.push_back({0, 0.0, {}, 0.0});
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    double sum = 0.0;
    Node node;
    while (j < raw.size() && raw[j].prm - raw[i].prm <= config.merge_tol) {
      sum += raw[j].prm;
      node.origins.push_back(raw[j].origin);
      ++j;
    }
    node.prm = sum / static_cast<double>(j - i);
    // unit score per interpretation until a scoring model replaces it
    node.score = static_cast<double>(j - i);
    nodes.push_back(std::move(node));
    i = j;
  }
  nodes.push_back({0, parent.residual, {}, 0.0});
  const auto n = nodes.size();

  std::vector<std::vector<NodeId>> by_peak(spectrum.peaks.size());
  for (NodeId v = 1; v + 1 < n; ++v) {
    for (const auto& o : nodes[v].origins) {
      auto& list = by_peak[o.peak];
      if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
    }
  }
  std::set<std::pair<NodeId, NodeId>> conflict_set;
  for (const auto& list : by_peak) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        conflict_set.emplace(std::min(list[a], list[b]), std::max(list[a], list[b]));
      }
    }
  }
  if (config.cross_peak_complements) {
    for (NodeId u = 1; u + 1 < n; ++u) {
      for (NodeId v = u + 1; v + 1 < n; ++v) {
        if (std::abs(nodes[u].prm + nodes[v].prm - parent.residual) <= config.merge_tol) {
          conflict_set.emplace(u, v);
        }
      }
    }
  }
  std::vector<ConflictEdge> conflicts;
  for (const auto& [a, b] : conflict_set) conflicts.push_back({a, b});

  const double max_span = composites().back().mass + config.edge_tol;
  std::vector<DirectedEdge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double diff = nodes[v].prm - nodes[u].prm;
      if (diff > max_span) break;
      auto label = label_for_mass(diff, config.edge_tol, config.max_edge_residues);
      if (label.residues == 0) continue;
      edges.push_back({u, v, std::move(label.label), label.residues, 0.0});
    }
  }
  return SpectrumGraph::assemble(parent, std::move(nodes), std::move(edges), std::move(conflicts));
}

SpectrumGraph remove_negative_nodes(const SpectrumGraph& graph) {
  const auto n = graph.node_count();
  std::vector<NodeId> remap(n, static_cast<NodeId>(-1));
  std::vector<Node> nodes;
  for (const auto& v : graph.nodes()) {
    if (!v.is_goalpost() && v.score < 0.0) continue;
    remap[v.id] = static_cast<NodeId>(nodes.size());
    nodes.push_back(v);
  }
  const NodeId gone = static_cast<NodeId>(-1);
  std::vector<DirectedEdge> edges;
  for (const auto& e : graph.edges()) {
    if (remap[e.from] == gone || remap[e.to] == gone) continue;
    auto copy = e;
    copy.from = remap[e.from];
    copy.to = remap[e.to];
    edges.push_back(std::move(copy));
  }
  std::vector<ConflictEdge> conflicts;
  for (const auto& c : graph.conflicts()) {
    if (remap[c.a] == gone || remap[c.b] == gone) continue;
    conflicts.push_back({remap[c.a], remap[c.b]});
  }
  return SpectrumGraph::assemble(graph.parent(), std::move(nodes), std::move(edges), std::move(conflicts));
}

GraphView::GraphView(const SpectrumGraph& graph)
    : graph_(&graph),
      source_(graph.source()),
      node_active_(graph.node_count(), 1),
      edge_active_(graph.edges().size(), 1) {}

GraphView restrict(const GraphView& view, std::span<const NodeId> forced_in,
                   std::span<const NodeId> forbidden) {
  const auto& g = view.graph();
  GraphView out = view;
  std::vector<NodeId> all_forced(view.forced().begin(), view.forced().end());
  all_forced.insert(all_forced.end(), forced_in.begin(), forced_in.end());
  for (NodeId f : forced_in) {
    if (!view.node_active(f)) throw ConflictingRestriction("forced node is not in the view");
    if (std::find(forbidden.begin(), forbidden.end(), f) != forbidden.end()) {
      throw ConflictingRestriction("node both forced and forbidden");
    }
  }
  for (std::size_t i = 0; i < all_forced.size(); ++i) {
    for (std::size_t j = i + 1; j < all_forced.size(); ++j) {
      if (g.in_conflict(all_forced[i], all_forced[j])) {
        throw ConflictingRestriction("forced nodes conflict with each other");
      }
    }
  }
  for (NodeId v : forbidden) out.deactivate_node(v);
  for (NodeId f : forced_in) {
    for (auto c : g.conflicts_of(f)) out.deactivate_node(g.conflict_partner(c, f));
    for (NodeId u = 0; u < f; ++u) {
      for (auto e = g.out_begin(u); e < g.out_end(u); ++e) {
        if (g.edge(e).to > f) out.deactivate_edge(e);
      }
    }
    out.add_forced(f);
  }
  return out;
}

std::string to_dot(const SpectrumGraph& graph) {
  std::string out = "digraph spectrum {\n  rankdir=LR;\n";
  char buf[160];
  for (const auto& v : graph.nodes()) {
    std::snprintf(buf, sizeof buf, "  n%u [label=\"%.2f\\n%.2f\"%s];\n", v.id, v.prm, v.score,
                  v.is_goalpost() ? ", shape=box" : "");
    out += buf;
  }
  for (const auto& e : graph.edges()) {
    std::snprintf(buf, sizeof buf, "  n%u -> n%u [label=\"%s\"];\n", e.from, e.to, e.label.c_str());
    out += buf;
  }
  for (const auto& c : graph.conflicts()) {
    std::snprintf(buf, sizeof buf, "  n%u -> n%u [dir=none, style=dashed];\n", c.a, c.b);
    out += buf;
  }
  out += "}\n";
  return out;
}

}  // namespace denovo
