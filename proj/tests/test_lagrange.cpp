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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "denovo/errors.hpp"
#include "denovo/lagrange.hpp"
#include "denovo/oracle.hpp"
#include "support/test_graphs.hpp"

using namespace denovo;
using namespace denovo::testing;

namespace {

std::vector<double> weights_of(const SpectrumGraph& g) {
  std::vector<double> w;
  for (const auto& e : g.edges()) w.push_back(e.weight);
  return w;
}

}  // namespace

TEST_CASE("dag_longest_path") {
  // edge weights are the scores of their tail nodes: 1, 2, 3 on the chain
  const auto chain = explicit_graph({1, 2, 3, 0}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(dag_longest_path(GraphView(chain), weights_of(chain)).score == 6.0);

  const auto diamond = explicit_graph({0, 5, 7, 0}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto lp = dag_longest_path(GraphView(diamond), weights_of(diamond));
  CHECK(lp.nodes == std::vector<NodeId>{0, 2, 3});
  CHECK(lp.score == 7.0);

  const auto trap = symmetric_trap_graph();
  const auto sym = dag_longest_path(GraphView(trap), weights_of(trap));
  CHECK(sym.nodes == std::vector<NodeId>{0, 1, 2, 3, 4, 6});

  const auto disconnected = explicit_graph({0, 1, 0}, {{0, 1}});
  CHECK_THROWS_AS(dag_longest_path(GraphView(disconnected), weights_of(disconnected)), NoFeasiblePath);
}

TEST_CASE("dag_longest_path ties prefer the smaller predecessor") {
  const auto tie = explicit_graph({0, 5, 5, 0}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(dag_longest_path(GraphView(tie), weights_of(tie)).nodes == std::vector<NodeId>{0, 1, 3});
}

TEST_CASE("relaxed_weights") {
  const auto g = explicit_graph({0, 1, 2, 3, 0}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {0, 4}},
                                {{1, 2}, {1, 3}});
  const GraphView view(g);
  const auto zero = relaxed_weights(view, std::vector<double>{0.0, 0.0});
  CHECK(zero.constant == 0.0);
  CHECK(zero.weights == weights_of(g));

  const auto r = relaxed_weights(view, std::vector<double>{0.5, 0.25});
  CHECK(r.constant == 0.75);
  CHECK(r.weights[g.find_edge(1, 2)] == 1.0 - 0.75);
  CHECK(r.weights[g.find_edge(1, 3)] == 1.0 - 0.75);
  CHECK(r.weights[g.find_edge(2, 4)] == 2.0 - 0.5);
  CHECK(r.weights[g.find_edge(3, 4)] == 3.0 - 0.25);
  CHECK(r.weights[g.find_edge(0, 4)] == 0.0);  // source has no conflicts
}

TEST_CASE("solve_lagrangian without conflicts is one longest-path call") {
  const auto g = explicit_graph({0, 5, 7, 0}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto report = solve_lagrangian(GraphView(g));
  REQUIRE(report.best);
  CHECK(report.iterations == 1);
  CHECK(report.converged);
  CHECK(report.best->score == 7.0);
  CHECK(report.bound == 7.0);
}

TEST_CASE("solve_lagrangian on the symmetric trap") {
  const auto g = symmetric_trap_graph();
  const auto report = solve_lagrangian(GraphView(g));
  REQUIRE(report.best);
  CHECK(report.best->nodes == std::vector<NodeId>{0, 1, 2, 3, 5, 6});
  CHECK(report.best->score == 5.0);
  CHECK(report.bound >= 5.0 - 1e-9);
  CHECK(report.converged);
  CHECK(exact_best(GraphView(g))->score == report.best->score);
}

TEST_CASE("no antisymmetric path") {
  const auto trapped = explicit_graph({0, 1, 1, 0}, {{0, 1}, {1, 2}, {2, 3}}, {{1, 2}});
  const auto report = solve_lagrangian(GraphView(trapped));
  CHECK_FALSE(report.best);
  CHECK_THROWS_AS(longest_antisymmetric_path(GraphView(trapped)), NoFeasiblePath);
}

TEST_CASE("random graphs match the oracle and respect the upper bound") {
  std::mt19937_64 rng(2024);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int internal = 6 + static_cast<int>(rng() % 18);  // up to 25 nodes
    const auto g = random_dag(rng, internal, 0.3, internal / 2 + 1);
    const GraphView full(g);
    const auto truth = exact_best(full);

    LagrangeOptions opts;
    opts.trace = [&](const GraphView& view, const TraceRecord& r) {
      for (double l : r.lambda) {
        if (l < 0.0) ++violations;
      }
      const auto local = exact_best(view);
      if (local && r.bound < local->score - 1e-9) ++violations;
    };
    const auto report = solve_lagrangian(full, opts);
    REQUIRE(report.best.has_value() == truth.has_value());
    if (truth) {
      CHECK(std::abs(report.best->score - truth->score) <= 1e-9);
      CHECK(conflict_free(g, report.best->nodes));
      CHECK(report.bound >= truth->score - 1e-9);
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("branch children partition the feasible set") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_dag(rng, 12, 0.35, 6);
    if (g.conflicts().empty()) continue;
    const GraphView full(g);
    const NodeId pivot = g.conflicts()[0].a;
    const NodeId list[] = {pivot};
    const auto with = exact_best(restrict(full, list, {}));
    const auto without = exact_best(restrict(full, {}, list));
    const auto parent = exact_best(full);
    std::optional<double> best_child;
    for (const auto& c : {with, without}) {
      if (c && (!best_child || c->score > *best_child)) best_child = c->score;
    }
    REQUIRE(best_child.has_value() == parent.has_value());
    if (parent) CHECK(*best_child == parent->score);

    // and the solver agrees on each child
    for (const auto& view : {restrict(full, list, {}), restrict(full, {}, list)}) {
      const auto truth = exact_best(view);
      const auto report = solve_lagrangian(view);
      REQUIRE(report.best.has_value() == truth.has_value());
      if (truth) CHECK(std::abs(report.best->score - truth->score) <= 1e-9);
      if (report.best) {
        for (NodeId f : view.forced()) {
          CHECK(std::find(report.best->nodes.begin(), report.best->nodes.end(), f) != report.best->nodes.end());
        }
      }
    }
  }
}

TEST_CASE("branching kicks in when the iteration budget is tiny") {
  std::mt19937_64 rng(5);
  int branched = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_dag(rng, 14, 0.35, 8);
    LagrangeOptions opts;
    opts.max_iter = 2;
    const auto report = solve_lagrangian(GraphView(g), opts);
    const auto truth = exact_best(GraphView(g));
    REQUIRE(report.best.has_value() == truth.has_value());
    if (truth) CHECK(std::abs(report.best->score - truth->score) <= 1e-9);
    branched += report.branches > 0;
  }
  CHECK(branched > 0);
}

TEST_CASE("abort bound stops early") {
  const auto g = symmetric_trap_graph();
  LagrangeOptions opts;
  opts.abort_bound = 100.0;
  const auto report = solve_lagrangian(GraphView(g), opts);
  CHECK(report.aborted);
  CHECK(report.iterations == 1);
}

TEST_CASE("solve is deterministic") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_dag(rng, 18, 0.3, 10);
    const auto a = solve_lagrangian(GraphView(g));
    const auto b = solve_lagrangian(GraphView(g));
    CHECK(a.best == b.best);
    CHECK(a.bound == b.bound);
    CHECK(a.iterations == b.iterations);
    CHECK(a.branches == b.branches);
  }
}

TEST_CASE("trace csv") {
  std::string csv = trace_csv_header();
  LagrangeOptions opts;
  opts.trace = [&](const GraphView&, const TraceRecord& r) { csv += trace_csv_row(r); };
  solve_lagrangian(GraphView(symmetric_trap_graph()), opts);
  CHECK(csv.rfind("t,z_lambda,z_star,theta,violated\n0,6,", 0) == 0);
}
