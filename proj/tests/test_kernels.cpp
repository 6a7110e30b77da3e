// Copyright 2026 The crownkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "crownkit/crown.hpp"
#include "crownkit/generators.hpp"
#include "crownkit/kernels.hpp"
#include "crownkit/oracles.hpp"
#include "crownkit/trace.hpp"

using namespace crownkit;

namespace {

Graph clique(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph(n, e);
}

Graph disjoint_paths(int copies, int len) {
  std::vector<Edge> e;
  for (int c = 0; c < copies; ++c) {
    for (int i = 0; i + 1 < len; ++i) e.push_back({c * len + i, c * len + i + 1});
  }
  return Graph(copies * len, e);
}

ProblemInstance graph_instance(Problem p, Graph g, int k) {
  ProblemInstance inst;
  inst.problem = p;
  inst.payload = std::move(g);
  inst.k = k;
  return inst;
}

// Decided answers match the oracle; reduced instances are equivalent, replay
// exactly and never raise the budget.
void check_sound(const ProblemInstance& inst, const KernelOutcome& out) {
  const bool truth = oracle_answer(inst);
  REQUIRE(out.decided.has_value() != out.reduced.has_value());
  if (out.decided) {
    CHECK(*out.decided == truth);
    return;
  }
  const ProblemInstance& red = *out.reduced;
  CHECK_NOTHROW(red.validate());
  CHECK(oracle_answer(red) == truth);
  CHECK(red.k <= inst.k);
  CHECK(red.k >= 0);
  CHECK(replay(inst, out.trace).canonical_text() == red.canonical_text());
  for (const auto& rule : out.trace) CHECK(rule.budget_delta <= 0);
}

}  // namespace

TEST_CASE("vertex cover examples") {
  std::vector<Edge> star;
  for (int i = 1; i <= 7; ++i) star.push_back({0, i});
  auto yes = kernelize_vertex_cover(Graph(8, star), 1);
  REQUIRE(yes.decided.has_value());
  CHECK(*yes.decided);

  for (int k = 0; k <= 4; ++k) {
    auto no = kernelize_vertex_cover(disjoint_paths(k + 1, 2), k);
    REQUIRE(no.decided.has_value());
    CHECK_FALSE(*no.decided);
  }
  auto negative = kernelize_vertex_cover(clique(3), -1);
  CHECK(negative.decided == false);
}

TEST_CASE("vertex cover random equivalence and size") {
  Rng rng(61);
  for (int t = 0; t < 300; ++t) {
    int n = uniform_int(rng, 1, 12);
    auto inst = graph_instance(Problem::vertex_cover,
                               random_graph(rng, n, 0.05 * uniform_int(rng, 1, 8)),
                               uniform_int(rng, 0, 5));
    auto out = kernelize_vertex_cover(inst.graph(), inst.k);
    check_sound(inst, out);
    if (out.reduced) {
      CHECK(out.reduced->graph().num_vertices() <= 3 * out.reduced->k);
    }
  }
}

TEST_CASE("nk coloring examples") {
  for (int n = 2; n <= 6; ++n) {
    auto out = kernelize_nk_coloring(clique(n), 1);
    CHECK(out.decided == false);
  }
  for (int k = 0; k <= 3; ++k) {
    auto out = kernelize_nk_coloring(Graph(k + 1), k);
    CHECK(out.decided == true);
  }
}

TEST_CASE("nk coloring random equivalence") {
  Rng rng(67);
  for (int t = 0; t < 300; ++t) {
    auto inst = graph_instance(Problem::nk_coloring,
                               random_graph(rng, uniform_int(rng, 1, 9), 0.1 * uniform_int(rng, 2, 9)),
                               uniform_int(rng, 0, 3));
    auto out = kernelize_nk_coloring(inst.graph(), inst.k);
    check_sound(inst, out);
    if (out.reduced) {
      CHECK(out.reduced->graph().num_vertices() <= 3 * out.reduced->k);
    }
  }
}

TEST_CASE("maxsat examples") {
  CnfFormula f(3, {{1}, {-1}, {2, 3}, {-2}});
  CHECK(kernelize_maxsat(f, 2).decided == true);
  CHECK(kernelize_maxsat(f, 0).decided == true);
  CHECK(kernelize_maxsat(f, 5).decided == false);
  // More variables than clauses and still unsatisfiable.
  CnfFormula tricky(3, {{1}, {-1}, {2, 3}});
  ProblemInstance inst;
  inst.problem = Problem::maxsat;
  inst.payload = tricky;
  inst.k = 3;
  check_sound(inst, kernelize_maxsat(tricky, 3));
}

TEST_CASE("maxsat random equivalence and size") {
  Rng rng(71);
  for (int t = 0; t < 300; ++t) {
    ProblemInstance inst;
    inst.problem = Problem::maxsat;
    inst.payload = random_cnf(rng, uniform_int(rng, 1, 12), uniform_int(rng, 1, 20),
                              uniform_int(rng, 1, 3));
    inst.k = uniform_int(rng, 0, 20);
    auto out = kernelize_maxsat(inst.formula(), inst.k);
    check_sound(inst, out);
    if (out.reduced) {
      CHECK(out.reduced->formula().num_vars() < out.reduced->k);
      CHECK(out.reduced->formula().num_clauses() < 2 * out.reduced->k);
    }
  }
}

TEST_CASE("list coloring examples") {
  std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
  Graph g(4, path);
  std::vector<std::vector<int>> same(4, {1, 2, 3});
  auto out = reduce_list_coloring_colors(g, 1, same);
  REQUIRE(out.reduced.has_value());
  CHECK(out.trace.empty());
  CHECK(out.reduced->lists == same);

  std::vector<std::vector<int>> wrong(4, {1, 2});
  CHECK_THROWS_AS(reduce_list_coloring_colors(g, 1, wrong), PreconditionError);
}

TEST_CASE("list coloring shrinks the palette") {
  // Two vertices, lists over six colors: colors 3..6 each see one vertex.
  Graph g(4, std::vector<Edge>{{0, 1}, {2, 3}});
  std::vector<std::vector<int>> lists{{1, 2, 3}, {1, 2, 4}, {1, 5, 6}, {2, 5, 6}};
  ProblemInstance inst = graph_instance(Problem::nk_list_coloring, g, 1);
  inst.lists = lists;
  auto out = reduce_list_coloring_colors(g, 1, lists);
  check_sound(inst, out);
  if (out.reduced) {
    std::set<int> colors;
    for (const auto& l : *out.reduced->lists) colors.insert(l.begin(), l.end());
    CHECK(static_cast<int>(colors.size()) <= out.reduced->graph().num_vertices());
  }
}

TEST_CASE("list coloring random") {
  Rng rng(73);
  for (int t = 0; t < 300; ++t) {
    ProblemInstance inst = random_instance(Problem::nk_list_coloring, rng);
    auto out = reduce_list_coloring_colors(inst.graph(), inst.k, *inst.lists);
    check_sound(inst, out);
    if (out.reduced) {
      std::set<int> colors;
      for (const auto& l : *out.reduced->lists) colors.insert(l.begin(), l.end());
      CHECK(static_cast<int>(colors.size()) <= out.reduced->graph().num_vertices());
    }
  }
}

TEST_CASE("longest cycle examples") {
  ProblemInstance tri = graph_instance(Problem::longest_cycle_vc, clique(3), 2);
  tri.ell = 3;
  tri.modulator = std::vector<Vertex>{0, 1};
  auto out = reduce_longest_cycle_vc(tri.graph(), 2, 3, *tri.modulator);
  REQUIRE(out.reduced.has_value());
  CHECK(out.reduced->graph() == clique(3));
  check_sound(tri, out);

  // C4 0-1-2-3 with S = {0, 2}; vertex 4 is a twin of 1.
  Graph c4(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 4}});
  ProblemInstance inst = graph_instance(Problem::longest_cycle_vc, c4, 2);
  inst.ell = 4;
  inst.modulator = std::vector<Vertex>{0, 2};
  auto red = reduce_longest_cycle_vc(c4, 2, 4, *inst.modulator);
  REQUIRE(red.reduced.has_value());
  CHECK(red.reduced->graph().num_vertices() == 4);
  CHECK(has_cycle_of_length(red.reduced->graph(), 4));
  check_sound(inst, red);

  CHECK_THROWS_AS(reduce_longest_cycle_vc(c4, 1, 4, std::vector<Vertex>{0}), PreconditionError);
}

TEST_CASE("longest cycle random") {
  Rng rng(79);
  for (int t = 0; t < 300; ++t) {
    ProblemInstance inst = random_instance(Problem::longest_cycle_vc, rng);
    auto out = reduce_longest_cycle_vc(inst.graph(), inst.k, *inst.ell, *inst.modulator);
    check_sound(inst, out);
    if (out.reduced) {
      int k = out.reduced->k;
      int pairs = *inst.ell == 4 ? k * (k - 1) : k * (k - 1) / 2;
      CHECK(out.reduced->graph().num_vertices() <= k + pairs);
    }
  }
}

TEST_CASE("pcoc examples") {
  for (int p = 1; p <= 3; ++p) {
    auto path = disjoint_paths(1, p + 1);
    CHECK(kernelize_pcoc(path, 0, p).decided == false);
    CHECK(kernelize_pcoc_weighted(path, 0, p).decided == false);
    auto one = kernelize_pcoc(path, 1, p);
    CHECK(one.decided != false);
  }
}

TEST_CASE("pcoc with p = 1 is vertex cover") {
  Rng rng(83);
  for (int t = 0; t < 200; ++t) {
    auto inst = graph_instance(Problem::pcoc, random_graph(rng, uniform_int(rng, 1, 11), 0.25),
                               uniform_int(rng, 0, 4));
    inst.p = 1;
    auto out = kernelize_pcoc(inst.graph(), inst.k, 1);
    check_sound(inst, out);
    bool vc = exact_vertex_cover(inst.graph()) <= inst.k;
    if (out.decided) CHECK(*out.decided == vc);
  }
}

TEST_CASE("pcoc random equivalence and bounds") {
  Rng rng(89);
  for (int t = 0; t < 200; ++t) {
    ProblemInstance inst = random_instance(Problem::pcoc, rng);
    int p = *inst.p;
    auto plain = kernelize_pcoc(inst.graph(), inst.k, p);
    check_sound(inst, plain);
    ProblemInstance winst = inst;
    winst.problem = Problem::pcoc_weighted;
    auto weighted = kernelize_pcoc_weighted(inst.graph(), inst.k, p);
    check_sound(winst, weighted);
    if (plain.decided && weighted.decided) CHECK(*plain.decided == *weighted.decided);

    for (const auto* out : {&plain, &weighted}) {
      if (!out->reduced) continue;
      const Graph& g = out->reduced->graph();
      int k2 = out->reduced->k;
      auto packing = greedy_connected_packing(g, p);
      CHECK(static_cast<int>(packing.size()) <= k2);
      std::vector<Vertex> x;
      for (const auto& s : packing) x.insert(x.end(), s.begin(), s.end());
      std::sort(x.begin(), x.end());
      auto comps = components_outside(g, x);
      int weight = 0;
      for (const auto& c : comps) {
        CHECK(static_cast<int>(c.size()) <= p);
        weight += static_cast<int>(c.size());
      }
      if (out == &plain) {
        CHECK(static_cast<int>(comps.size()) <= p * (p + 1) * k2);
      } else {
        CHECK(weight <= (2 * p - 1) * (p + 1) * k2);
      }
    }
  }
}

TEST_CASE("weighted pcoc beats the plain kernel on a hub of triangles") {
  // K4 on 0..3, eleven triangles each hanging off vertex 0.
  std::vector<Edge> e;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) e.push_back({u, v});
  }
  for (int t = 0; t < 11; ++t) {
    int b = 4 + 3 * t;
    e.push_back({b, b + 1});
    e.push_back({b + 1, b + 2});
    e.push_back({b, b + 2});
    e.push_back({0, b});
  }
  Graph g(37, e);
  const int p = 3, k = 1;
  auto plain = kernelize_pcoc(g, k, p);
  auto weighted = kernelize_pcoc_weighted(g, k, p);
  REQUIRE(plain.reduced.has_value());
  int plain_size = plain.reduced->graph().num_vertices();
  CHECK(plain_size - (p + 1) * k > (2 * p - 1) * (p + 1) * k);
  int weighted_size = weighted.reduced ? weighted.reduced->graph().num_vertices() : 0;
  CHECK(weighted_size < plain_size);
  if (weighted.decided) CHECK(*weighted.decided);
}

TEST_CASE("cvd examples") {
  Graph clusters(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  CHECK(bound_cvd_cliques(clusters, 0).decided == true);
  for (int k = 0; k <= 3; ++k) {
    CHECK(bound_cvd_cliques(disjoint_paths(k + 1, 3), k).decided == false);
  }
}

TEST_CASE("cvd random equivalence and clique bound") {
  Rng rng(97);
  for (int t = 0; t < 200; ++t) {
    ProblemInstance inst = random_instance(Problem::cvd_clique_bound, rng);
    auto out = bound_cvd_cliques(inst.graph(), inst.k);
    check_sound(inst, out);
    if (!out.reduced) continue;
    const Graph& g = out.reduced->graph();
    std::vector<Vertex> s;
    for (const auto& t3 : greedy_p3_packing(g)) s.insert(s.end(), t3.begin(), t3.end());
    std::sort(s.begin(), s.end());
    CHECK(static_cast<int>(components_outside(g, s).size()) <= 6 * out.reduced->k);
  }
}

TEST_CASE("dispatcher and trace text") {
  Rng rng(101);
  for (Problem p : kAllProblems) {
    for (int t = 0; t < 40; ++t) {
      ProblemInstance inst = random_instance(p, rng);
      auto out = kernelize(inst);
      check_sound(inst, out);
      auto again = kernelize(inst);
      CHECK(serialize_trace(out.trace) == serialize_trace(again.trace));
      CHECK(out.surviving == again.surviving);
    }
  }
}

TEST_CASE("packings are maximal") {
  Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    Graph g = random_graph(rng, uniform_int(rng, 1, 14), 0.2);
    int p = uniform_int(rng, 1, 3);
    std::vector<Vertex> x;
    for (const auto& s : greedy_connected_packing(g, p)) {
      CHECK(static_cast<int>(s.size()) == p + 1);
      x.insert(x.end(), s.begin(), s.end());
    }
    std::sort(x.begin(), x.end());
    CHECK(std::adjacent_find(x.begin(), x.end()) == x.end());
    for (const auto& c : components_outside(g, x)) CHECK(static_cast<int>(c.size()) <= p);

    std::vector<Vertex> s;
    for (const auto& t3 : greedy_p3_packing(g)) s.insert(s.end(), t3.begin(), t3.end());
    std::sort(s.begin(), s.end());
    auto rest = delete_vertices(g, s).graph;
    CHECK(exact_cvd(rest) == 0);
  }
}
