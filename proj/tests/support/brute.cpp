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

#include "support/brute.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

namespace brute {

namespace {

using Mask = std::uint32_t;

Mask hood_of(const BipartiteGraph& g, Mask xs) {
  Mask out = 0;
  for (int a = 0; a < g.size_a(); ++a) {
    if (!(xs >> a & 1u)) continue;
    for (int b : g.neighbors_of_a(a)) out |= Mask{1} << b;
  }
  return out;
}

}  // namespace

int max_matching_size(const BipartiteGraph& g) {
  const int na = g.size_a(), nb = g.size_b();
  std::vector<int> memo(static_cast<std::size_t>(na + 1) << nb, -1);
  std::function<int(int, Mask)> best = [&](int a, Mask used) -> int {
    if (a == na) return 0;
    int& slot = memo[(static_cast<std::size_t>(a) << nb) | used];
    if (slot >= 0) return slot;
    int r = best(a + 1, used);
    for (int b : g.neighbors_of_a(a)) {
      if (!(used >> b & 1u)) r = std::max(r, 1 + best(a + 1, used | Mask{1} << b));
    }
    return slot = r;
  };
  return best(0, 0);
}

int min_bipartite_cover(const BipartiteGraph& g) {
  const int na = g.size_a(), n = na + g.size_b();
  int best = n;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool covers = true;
    for (const auto& e : g.edges()) {
      if (!(s >> e.a & 1u) && !(s >> (na + e.b) & 1u)) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min(best, std::popcount(s));
  }
  return best;
}

bool has_hall_violator(const BipartiteGraph& g) {
  for (Mask x = 1; x < (Mask{1} << g.size_a()); ++x) {
    if (std::popcount(hood_of(g, x)) < std::popcount(x)) return true;
  }
  return false;
}

bool is_minimal_violator(const BipartiteGraph& g, const std::vector<int>& x) {
  Mask full = 0;
  for (int a : x) full |= Mask{1} << a;
  if (x.empty() || std::popcount(hood_of(g, full)) >= std::popcount(full)) return false;
  for (Mask sub = (full - 1) & full; sub; sub = (sub - 1) & full) {
    if (std::popcount(hood_of(g, sub)) < std::popcount(sub)) return false;
  }
  return true;
}

int capacitated_total(const BipartiteGraph& g, const std::vector<int>& caps) {
  std::vector<int> load(g.size_a(), 0);
  std::function<int(int)> go = [&](int b) -> int {
    if (b == g.size_b()) return 0;
    int r = go(b + 1);
    for (int a : g.neighbors_of_b(b)) {
      if (load[a] < caps[a]) {
        ++load[a];
        r = std::max(r, 1 + go(b + 1));
        --load[a];
      }
    }
    return r;
  };
  return go(0);
}

bool surplus_by_subsets(const BipartiteGraph& g, int q) {
  for (Mask x = 1; x < (Mask{1} << g.size_a()); ++x) {
    if (std::popcount(hood_of(g, x)) < std::popcount(x) + q) return false;
  }
  return true;
}

bool surplus_by_deletion(const BipartiteGraph& g, int q) {
  const int nb = g.size_b();
  const int take = std::min(q, nb);
  std::vector<int> all_a(g.size_a());
  std::iota(all_a.begin(), all_a.end(), 0);
  for (Mask del = 0; del < (Mask{1} << nb); ++del) {
    if (std::popcount(del) != take) continue;
    std::vector<int> keep_b;
    for (int b = 0; b < nb; ++b) {
      if (!(del >> b & 1u)) keep_b.push_back(b);
    }
    auto sub = g.induced(all_a, keep_b);
    if (max_matching_size(sub.graph) != g.size_a()) return false;
  }
  return true;
}

bool ratio_expansion_by_subsets(const BipartiteGraph& g, const std::vector<int>& a_hat,
                                const std::vector<int>& b_hat, int q) {
  Mask allowed = 0;
  for (int b : b_hat) allowed |= Mask{1} << b;
  const int n = static_cast<int>(a_hat.size());
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    Mask x = 0;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1u) x |= Mask{1} << a_hat[i];
    }
    if (std::popcount(hood_of(g, x) & allowed) < q * std::popcount(s)) return false;
  }
  return true;
}

bool weighted_expansion_exists(const WeightedBipartiteGraph& wg, int q) {
  const BipartiteGraph& g = wg.base();
  const Weight w_cap = wg.w_b_max();
  std::vector<int> f(g.size_b(), -1);
  std::function<bool(int)> go = [&](int b) -> bool {
    if (b == g.size_b()) {
      std::vector<Weight> load(g.size_a(), 0);
      std::vector<bool> in_x(g.size_a(), false);
      bool any = false;
      for (int y = 0; y < g.size_b(); ++y) {
        if (f[y] < 0) continue;
        any = true;
        load[f[y]] += wg.weight_b(y);
        for (int a : g.neighbors_of_b(y)) in_x[a] = true;
      }
      if (!any) return false;
      for (int a = 0; a < g.size_a(); ++a) {
        if (in_x[a] && load[a] < q - w_cap + 1) return false;
      }
      return true;
    }
    for (int choice = -1; choice < static_cast<int>(g.neighbors_of_b(b).size()); ++choice) {
      f[b] = choice < 0 ? -1 : g.neighbors_of_b(b)[choice];
      if (go(b + 1)) return true;
    }
    return false;
  };
  return go(0);
}

bool balanced_expansion_exists(const WeightedBipartiteGraph& wg, Weight q) {
  const BipartiteGraph& g = wg.base();
  Weight w_max = std::max<Weight>(1, wg.w_b_max());
  std::vector<int> f(g.size_b(), -1);
  std::function<bool(int)> go = [&](int b) -> bool {
    if (b == g.size_b()) {
      std::vector<Weight> load(wg.weights_a());
      for (int y = 0; y < g.size_b(); ++y) load[f[y]] += wg.weight_b(y);
      for (Mask a1 = 0; a1 < (Mask{1} << g.size_a()); ++a1) {
        bool ok = true;
        for (int a = 0; a < g.size_a() && ok; ++a) {
          ok = (a1 >> a & 1u) ? load[a] >= q - w_max + 1 : load[a] <= q + w_max - 1;
        }
        for (int y = 0; y < g.size_b() && ok; ++y) {
          if (!(a1 >> f[y] & 1u)) continue;
          for (int a : g.neighbors_of_b(y)) ok = ok && (a1 >> a & 1u);
        }
        if (ok) return true;
      }
      return false;
    }
    for (int a : g.neighbors_of_b(b)) {
      f[b] = a;
      if (go(b + 1)) return true;
    }
    return false;
  };
  return go(0);
}

std::vector<std::vector<int>> union_find_components(const Graph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::vector<std::vector<int>> by_root(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& part : by_root) {
    if (!part.empty()) out.push_back(part);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int chromatic_by_subsets(const Graph& g) {
  const int n = g.num_vertices();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<bool> independent(full + 1, true);
  for (Mask s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    Mask rest = s & (s - 1);
    bool ok = independent[rest];
    for (int u : g.neighbors(v)) ok = ok && !(rest >> u & 1u);
    independent[s] = ok;
  }
  std::vector<int> chi(full + 1, n + 1);
  chi[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    Mask low = s & (~s + 1);
    Mask others = s & ~low;
    for (Mask sub = others;; sub = (sub - 1) & others) {
      Mask cls = sub | low;
      if (independent[cls]) chi[s] = std::min(chi[s], chi[s & ~cls] + 1);
      if (sub == 0) break;
    }
  }
  return chi[full];
}

}  // namespace brute
