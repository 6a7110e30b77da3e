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

#include "crownkit/oracles.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace crownkit {

namespace {

void guard(int size, int limit, const char* what) {
  if (size > limit) {
    throw OracleGuardError(std::string(what) + ": size " + std::to_string(size) +
                           " exceeds oracle limit " + std::to_string(limit));
  }
}

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  }
  return adj;
}

int vc_branch(const std::vector<Mask>& adj, Mask alive) {
  int best_v = -1, best_deg = 0;
  for (Mask m = alive; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int d = std::popcount(adj[v] & alive);
    if (d > best_deg) {
      best_deg = d;
      best_v = v;
    }
  }
  if (best_v < 0) return 0;
  Mask without_v = alive & ~(Mask{1} << best_v);
  int take_v = 1 + vc_branch(adj, without_v);
  Mask hood = adj[best_v] & alive;
  int take_hood = best_deg + vc_branch(adj, without_v & ~hood);
  return take_v < take_hood ? take_v : take_hood;
}

// Components of g[alive], each no larger than limit.
bool components_at_most(const std::vector<Mask>& adj, Mask alive, int limit) {
  Mask left = alive;
  while (left) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask m = frontier; m; m &= m - 1) grow |= adj[std::countr_zero(m)];
      grow &= alive & ~comp;
      comp |= grow;
      frontier = grow;
    }
    if (std::popcount(comp) > limit) return false;
    left &= ~comp;
  }
  return true;
}

bool is_cluster(const std::vector<Mask>& adj, Mask alive) {
  for (Mask m = alive; m; m &= m - 1) {
    int v = std::countr_zero(m);
    Mask closed_v = (adj[v] & alive) | (Mask{1} << v);
    for (Mask n = adj[v] & alive; n; n &= n - 1) {
      int u = std::countr_zero(n);
      Mask closed_u = (adj[u] & alive) | (Mask{1} << u);
      if (closed_u != closed_v) return false;
    }
  }
  return true;
}

template <typename Pred>
int min_deletion(const Graph& g, Pred ok) {
  const int n = g.num_vertices();
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  int best = n;
  for (Mask del = 0; del <= full; ++del) {
    int size = std::popcount(del);
    if (size < best && ok(full & ~del)) best = size;
    if (del == full) break;
  }
  return best;
}

}  // namespace

int exact_vertex_cover(const Graph& g) {
  guard(g.num_vertices(), 20, "exact_vertex_cover");
  const int n = g.num_vertices();
  return vc_branch(adjacency_masks(g), n == 0 ? 0 : (Mask{1} << n) - 1);
}

int exact_chromatic_number(const Graph& g) {
  const int n = g.num_vertices();
  guard(n, 10, "exact_chromatic_number");
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  for (int c = 1; c <= n; ++c) {
    std::function<bool(int)> place = [&](int v) {
      if (v == n) return true;
      for (int col = 0; col < c; ++col) {
        bool clash = false;
        for (Vertex u : g.neighbors(v)) clash = clash || (u < v && color[u] == col);
        if (clash) continue;
        color[v] = col;
        if (place(v + 1)) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(0)) return c;
  }
  return n;
}

int exact_maxsat(const CnfFormula& f) {
  const int n = f.num_vars();
  guard(n, 16, "exact_maxsat");
  int best = 0;
  for (std::uint32_t assign = 0; assign < (std::uint32_t{1} << n); ++assign) {
    int sat = 0;
    for (const Clause& c : f.clauses()) {
      for (Literal lit : c) {
        bool value = (assign >> (std::abs(lit) - 1)) & 1u;
        if (value == (lit > 0)) {
          ++sat;
          break;
        }
      }
    }
    if (sat > best) best = sat;
  }
  return best;
}

int exact_pcoc(const Graph& g, int p) {
  guard(g.num_vertices(), 14, "exact_pcoc");
  auto adj = adjacency_masks(g);
  return min_deletion(g, [&](Mask alive) { return components_at_most(adj, alive, p); });
}

int exact_cvd(const Graph& g) {
  guard(g.num_vertices(), 14, "exact_cvd");
  auto adj = adjacency_masks(g);
  return min_deletion(g, [&](Mask alive) { return is_cluster(adj, alive); });
}

bool has_cycle_of_length(const Graph& g, int ell) {
  const int n = g.num_vertices();
  guard(n, 12, "has_cycle_of_length");
  if (ell < 3 || ell > n) return false;
  auto adj = adjacency_masks(g);
  // Cycles are anchored at their smallest vertex.
  std::function<bool(int, int, Mask, int)> walk = [&](int start, int v, Mask used,
                                                      int len) {
    if (len == ell) return ((adj[v] >> start) & 1u) != 0;
    for (Mask m = adj[v] & ~used; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (u < start) continue;
      if (walk(start, u, used | (Mask{1} << u), len + 1)) return true;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    if (walk(s, s, Mask{1} << s, 1)) return true;
  }
  return false;
}

bool exact_list_coloring(const Graph& g, const std::vector<std::vector<int>>& lists) {
  const int n = g.num_vertices();
  guard(n, 8, "exact_list_coloring");
  std::vector<int> color(n);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int c : lists[v]) {
      bool clash = false;
      for (Vertex u : g.neighbors(v)) clash = clash || (u < v && color[u] == c);
      if (clash) continue;
      color[v] = c;
      if (place(v + 1)) return true;
    }
    return false;
  };
  return place(0);
}

bool oracle_answer(const ProblemInstance& inst) {
  switch (inst.problem) {
    case Problem::vertex_cover:
      return exact_vertex_cover(inst.graph()) <= inst.k;
    case Problem::nk_coloring:
      return exact_chromatic_number(inst.graph()) <=
             inst.graph().num_vertices() - inst.k;
    case Problem::maxsat:
      return exact_maxsat(inst.formula()) >= inst.k;
    case Problem::nk_list_coloring:
      return exact_list_coloring(inst.graph(), *inst.lists);
    case Problem::longest_cycle_vc:
      return has_cycle_of_length(inst.graph(), *inst.ell);
    case Problem::pcoc:
    case Problem::pcoc_weighted:
      return exact_pcoc(inst.graph(), *inst.p) <= inst.k;
    case Problem::cvd_clique_bound:
      return exact_cvd(inst.graph()) <= inst.k;
  }
  return false;
}

}  // namespace crownkit
