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

#include <vector>

#include "crownkit/bipartite.hpp"
#include "crownkit/generators.hpp"
#include "crownkit/matching.hpp"
#include "support/brute.hpp"

using namespace crownkit;

namespace {

BipartiteGraph complete(int na, int nb) {
  std::vector<BipartiteEdge> e;
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) e.push_back({a, b});
  }
  return BipartiteGraph(na, nb, e);
}

}  // namespace

TEST_CASE("max matching small cases") {
  CHECK(max_matching(complete(3, 3)).size() == 3);
  CHECK(max_matching(complete(1, 5)).size() == 1);
  CHECK(max_matching(complete(0, 0)).size() == 0);
  CHECK(max_matching(complete(0, 3)).saturates_a());
}

TEST_CASE("max matching agrees with exhaustive search") {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    auto g = random_bipartite(rng, uniform_int(rng, 0, 8), uniform_int(rng, 0, 8),
                              0.1 + 0.05 * uniform_int(rng, 0, 10));
    Matching m = max_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == brute::max_matching_size(g));
  }
}

TEST_CASE("koenig duality") {
  Rng rng(202);
  for (int t = 0; t < 150; ++t) {
    auto g = random_bipartite(rng, uniform_int(rng, 0, 6), uniform_int(rng, 0, 6), 0.35);
    CHECK(max_matching(g).size() == brute::min_bipartite_cover(g));
  }
}

TEST_CASE("is_matching rejects bad matchings") {
  auto g = complete(2, 2);
  Matching m = max_matching(g);
  Matching broken = m;
  broken.mate_b[broken.mate_a[0]] = 1;
  CHECK_FALSE(is_matching(g, broken));

  std::vector<BipartiteEdge> one{{0, 0}};
  BipartiteGraph sparse(1, 2, one);
  Matching wrong{{1}, {kUnmatched, 0}};
  CHECK_FALSE(is_matching(sparse, wrong));
}

TEST_CASE("minimal hall set") {
  CHECK_FALSE(minimal_hall_set(complete(2, 2)).has_value());

  std::vector<BipartiteEdge> shared{{0, 0}, {1, 0}};
  auto v = minimal_hall_set(BipartiteGraph(2, 2, shared));
  REQUIRE(v.has_value());
  CHECK(v->x == std::vector<int>{0, 1});
  CHECK(v->neighborhood == std::vector<int>{0});

  Rng rng(303);
  for (int t = 0; t < 300; ++t) {
    auto g = random_bipartite(rng, uniform_int(rng, 1, 8), uniform_int(rng, 0, 8), 0.25);
    auto hall = minimal_hall_set(g);
    CHECK(hall.has_value() == brute::has_hall_violator(g));
    CHECK(hall.has_value() == !max_matching(g).saturates_a());
    if (!hall) continue;
    std::vector<bool> in_n(g.size_b(), false);
    for (int a : hall->x) {
      for (int b : g.neighbors_of_a(a)) in_n[b] = true;
    }
    std::vector<int> expected;
    for (int b = 0; b < g.size_b(); ++b) {
      if (in_n[b]) expected.push_back(b);
    }
    CHECK(hall->neighborhood == expected);
    CHECK(brute::is_minimal_violator(g, hall->x));
  }
}

TEST_CASE("capacitated assignment") {
  std::vector<int> ones(3, 1);
  CHECK(capacitated_assignment(complete(3, 4), ones).total == 3);
  std::vector<int> two{2};
  auto star = capacitated_assignment(complete(1, 4), two);
  CHECK(star.total == 2);
  CHECK(star.load[0] == 2);

  Rng rng(404);
  for (int t = 0; t < 300; ++t) {
    auto g = random_bipartite(rng, uniform_int(rng, 0, 6), uniform_int(rng, 0, 6), 0.35);
    std::vector<int> caps(g.size_a());
    for (int& c : caps) c = uniform_int(rng, 1, 3);
    auto got = capacitated_assignment(g, caps);
    CHECK(got.total == brute::capacitated_total(g, caps));
    std::vector<int> load(g.size_a(), 0);
    int total = 0;
    for (int b = 0; b < g.size_b(); ++b) {
      int a = got.owner_of_b[b];
      if (a == kUnmatched) continue;
      CHECK(g.adjacent(a, b));
      ++load[a];
      ++total;
    }
    CHECK(load == got.load);
    CHECK(total == got.total);
    for (int a = 0; a < g.size_a(); ++a) CHECK(load[a] <= caps[a]);

    std::vector<int> unit(g.size_a(), 1);
    CHECK(capacitated_assignment(g, unit).total == max_matching(g).size());
  }
}

TEST_CASE("surplus") {
  CHECK(has_surplus_q(complete(3, 5), 2));
  CHECK_FALSE(has_surplus_q(complete(3, 5), 3));
  std::vector<BipartiteEdge> low{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}};
  CHECK_FALSE(has_surplus_q(BipartiteGraph(2, 3, low), 2));

  Rng rng(505);
  for (int t = 0; t < 300; ++t) {
    auto g = random_bipartite(rng, uniform_int(rng, 0, 7), uniform_int(rng, 0, 10), 0.45);
    int q = uniform_int(rng, 0, 3);
    bool got = has_surplus_q(g, q);
    CHECK(got == brute::surplus_by_subsets(g, q));
    CHECK(got == brute::surplus_by_deletion(g, q));
    if (q == 0) CHECK(got == max_matching(g).saturates_a());
  }
}

TEST_CASE("alternating reach") {
  std::vector<BipartiteEdge> path{{0, 0}, {1, 0}, {1, 1}};
  BipartiteGraph g(2, 2, path);
  Matching m{{0, kUnmatched}, {0, kUnmatched}};
  Reach r = reach_from_free_a(g, m);
  CHECK(r.a == std::vector<bool>{true, true});
  CHECK(r.b == std::vector<bool>{true, true});
  Reach rb = reach_from_free_b(g, m);
  CHECK(rb.b[1]);
  CHECK(rb.a[1]);
}
