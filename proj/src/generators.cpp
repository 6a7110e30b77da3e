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

#include "crownkit/generators.hpp"

#include <algorithm>
#include <numeric>

namespace crownkit {

namespace {

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

int uniform_int(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

bool coin(Rng& rng, double probability) {
  return unit(rng) < probability;
}

Graph random_graph(Rng& rng, int n, double density) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, density)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

BipartiteGraph random_bipartite(Rng& rng, int size_a, int size_b, double density) {
  std::vector<BipartiteEdge> edges;
  for (int a = 0; a < size_a; ++a) {
    for (int b = 0; b < size_b; ++b) {
      if (coin(rng, density)) edges.push_back({a, b});
    }
  }
  return BipartiteGraph(size_a, size_b, edges);
}

CnfFormula random_cnf(Rng& rng, int num_vars, int num_clauses, int max_len) {
  std::vector<Clause> clauses;
  std::vector<int> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 1);
  for (int i = 0; i < num_clauses; ++i) {
    int len = uniform_int(rng, 1, std::min(max_len, num_vars));
    for (int j = 0; j < len; ++j) {
      std::swap(vars[j], vars[uniform_int(rng, j, num_vars - 1)]);
    }
    Clause c;
    for (int j = 0; j < len; ++j) c.push_back(coin(rng, 0.5) ? vars[j] : -vars[j]);
    clauses.push_back(std::move(c));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

Graph random_hub_graph(Rng& rng, int hubs, int comps, int max_comp,
                       bool cliques) {
  std::vector<Edge> edges;
  int n = hubs;
  for (int h = 0; h + 1 < hubs; ++h) {
    if (coin(rng, 0.3)) edges.push_back({h, h + 1});
  }
  for (int c = 0; c < comps; ++c) {
    int size = uniform_int(rng, 1, max_comp);
    int first = n;
    n += size;
    for (int i = 1; i < size; ++i) {
      if (cliques) {
        for (int j = 0; j < i; ++j) edges.push_back({first + j, first + i});
      } else {
        edges.push_back({first + uniform_int(rng, 0, i - 1), first + i});
      }
    }
    if (hubs > 0 && coin(rng, 0.9)) {
      int hub = uniform_int(rng, 0, hubs - 1);
      edges.push_back({hub, first + uniform_int(rng, 0, size - 1)});
      if (hubs > 1 && coin(rng, 0.2)) {
        int other = uniform_int(rng, 0, hubs - 1);
        Vertex v = first + uniform_int(rng, 0, size - 1);
        if (other != hub) edges.push_back({other, v});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

namespace {

double density(Rng& rng) { return 0.1 + 0.5 * unit(rng); }

Graph small_graph(Rng& rng, int max_n, bool cliques, int max_comp) {
  if (coin(rng, 0.5)) return random_graph(rng, uniform_int(rng, 1, max_n), density(rng));
  int hubs = uniform_int(rng, 1, 3);
  Graph g;
  do {
    g = random_hub_graph(rng, hubs, uniform_int(rng, 1, 8), max_comp, cliques);
  } while (g.num_vertices() > max_n);
  return g;
}

}  // namespace

ProblemInstance random_instance(Problem problem, Rng& rng) {
  ProblemInstance inst;
  inst.problem = problem;
  switch (problem) {
    case Problem::vertex_cover:
      inst.payload = small_graph(rng, 12, false, 2);
      inst.k = uniform_int(rng, 0, 5);
      break;
    case Problem::nk_coloring: {
      int n = uniform_int(rng, 1, 9);
      inst.payload = random_graph(rng, n, 0.2 + 0.7 * unit(rng));
      inst.k = uniform_int(rng, 0, 4);
      break;
    }
    case Problem::maxsat: {
      int n = uniform_int(rng, 1, 12);
      int m = uniform_int(rng, 1, 20);
      inst.payload = random_cnf(rng, n, m, 3);
      inst.k = uniform_int(rng, 0, std::min(m + 1, 12));
      break;
    }
    case Problem::nk_list_coloring: {
      int n = uniform_int(rng, 1, 8);
      inst.payload = random_graph(rng, n, density(rng));
      inst.k = uniform_int(rng, 0, std::min(n, 3));
      int palette = n + uniform_int(rng, 0, 4);
      std::vector<int> colors(palette);
      std::iota(colors.begin(), colors.end(), 1);
      std::vector<std::vector<int>> lists;
      for (int v = 0; v < n; ++v) {
        for (int j = 0; j < n - inst.k; ++j) {
          std::swap(colors[j], colors[uniform_int(rng, j, palette - 1)]);
        }
        std::vector<int> l(colors.begin(), colors.begin() + (n - inst.k));
        std::sort(l.begin(), l.end());
        lists.push_back(std::move(l));
      }
      inst.lists = std::move(lists);
      break;
    }
    case Problem::longest_cycle_vc: {
      int n = uniform_int(rng, 3, 10);
      int s = uniform_int(rng, 1, std::min(4, n));
      std::vector<Edge> edges;
      double d = density(rng) + 0.2;
      for (Vertex u = 0; u < s; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (coin(rng, d)) edges.push_back({u, v});
        }
      }
      // Relabel so the cover is not always a prefix.
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
      for (Edge& e : edges) {
        Vertex a = perm[e.u], b = perm[e.v];
        e = {std::min(a, b), std::max(a, b)};
      }
      std::vector<Vertex> mod;
      for (Vertex v = 0; v < s; ++v) mod.push_back(perm[v]);
      std::sort(mod.begin(), mod.end());
      inst.payload = Graph(n, edges);
      inst.k = s;
      inst.ell = uniform_int(rng, 3, 6);
      inst.modulator = std::move(mod);
      break;
    }
    case Problem::pcoc:
    case Problem::pcoc_weighted: {
      int p = uniform_int(rng, 1, 3);
      inst.payload = small_graph(rng, 12, false, p);
      inst.p = p;
      inst.k = uniform_int(rng, 0, 3);
      break;
    }
    case Problem::cvd_clique_bound:
      inst.payload = small_graph(rng, 12, true, 3);
      inst.k = uniform_int(rng, 0, 4);
      break;
  }
  return inst;
}

}  // namespace crownkit
