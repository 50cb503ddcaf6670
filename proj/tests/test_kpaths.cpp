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
#include <set>

#include "doctest.h"
#include "denovo/kpaths.hpp"
#include "denovo/oracle.hpp"
#include "support/test_graphs.hpp"

using namespace denovo;
using namespace denovo::testing;

namespace {

std::vector<double> scores_of(const std::vector<AntisymPath>& paths) {
  std::vector<double> out;
  for (const auto& p : paths) out.push_back(p.score);
  return out;
}

bool same_multiset(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("k = 1 is the single best antisymmetric path") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_dag(rng, 15, 0.3, 6);
    const auto one = k_best_antisymmetric(g, 1);
    const auto direct = solve_lagrangian(GraphView(g));
    REQUIRE(one.size() == (direct.best ? 1u : 0u));
    if (direct.best) CHECK(one[0] == *direct.best);
  }
}

TEST_CASE("k-best matches the oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = trial % 2 ? random_dag(rng, 14, 0.3, 7) : random_spectrum_graph(rng, 15, 25);
    for (std::size_t k : {20u, 30u, 50u}) {
      const auto result = k_best_antisymmetric_report(g, k);
      const auto truth = exact_k_best(g, k);
      CHECK(same_multiset(scores_of(result.paths), scores_of(truth)));

      std::set<std::vector<NodeId>> distinct;
      for (std::size_t i = 0; i < result.paths.size(); ++i) {
        const auto& p = result.paths[i];
        CHECK(conflict_free(g, p.nodes));
        CHECK(p.score == path_score(g, p.nodes));
        distinct.insert(p.nodes);
        if (i > 0) {
          CHECK(p.score <= result.paths[i - 1].score);
          CHECK(deviation_node(p, std::span(result.paths).first(i)) == result.deviation_index[i]);
        }
      }
      CHECK(distinct.size() == result.paths.size());
    }
  }
}

TEST_CASE("k-best stops when the graph runs out of paths") {
  const auto g = symmetric_trap_graph();
  const auto all = k_best_antisymmetric(g, 10);
  CHECK(all.size() == 3);
  CHECK(scores_of(all) == std::vector<double>{5, 4, 3});
}

TEST_CASE("raising k keeps the earlier answers") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_spectrum_graph(rng, 15, 25);
    const auto small = k_best_antisymmetric(g, 10);
    const auto large = k_best_antisymmetric(g, 30);
    REQUIRE(large.size() >= small.size());
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
  }
}

TEST_CASE("deviation_node") {
  AntisymPath p1{{0, 1, 2, 3, 9}, "", 0};
  AntisymPath shares_source{{0, 4, 5, 9}, "", 0};
  AntisymPath shares_three{{0, 1, 2, 7, 9}, "", 0};
  const AntisymPath prev[] = {p1};
  CHECK(deviation_node(shares_source, prev) == 0);
  CHECK(deviation_node(shares_three, prev) == 2);
}

TEST_CASE("candidate set") {
  CandidateSet set;
  CHECK(set.push({{{0, 1, 9}, "", 2.0}, 0, 0}));
  CHECK_FALSE(set.push({{{0, 1, 9}, "", 2.0}, 1, 0}));
  CHECK(set.push({{{0, 2, 9}, "", 3.0}, 0, 0}));
  CHECK(set.push({{{0, 3, 9}, "", 3.0}, 0, 0}));
  CHECK(set.nth_score(3) == 2.0);
  CHECK_FALSE(set.nth_score(4));
  CHECK(set.pop_best().path.nodes == std::vector<NodeId>{0, 2, 9});
  CHECK(set.pop_best().path.nodes == std::vector<NodeId>{0, 3, 9});
  CHECK(set.size() == 1);
}
