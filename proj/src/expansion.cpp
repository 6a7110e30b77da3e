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

#include "crownkit/expansion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "crownkit/matching.hpp"

namespace crownkit {

namespace {

using ShareMap = std::map<std::pair<int, int>, Weight>;  // (a, b) -> units

void require_no_isolated_b(const BipartiteGraph& g, const char* who) {
  for (int b = 0; b < g.size_b(); ++b) {
    if (g.neighbors_of_b(b).empty()) {
      throw PreconditionError(std::string(who) + ": B vertex " +
                              std::to_string(b) + " is isolated");
    }
  }
}

std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

std::vector<int> marked(const std::vector<bool>& flags) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(flags.size()); ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

// Repeatedly pushes shares around an even cycle of the support graph until
// the support is a forest. Node sums are unchanged.
void cancel_cycles(int na, int nb, ShareMap& shares) {
  const int nodes = na + nb;
  for (;;) {
    std::vector<std::vector<int>> adj(nodes);
    for (const auto& [ab, s] : shares) {
      if (s <= 0) continue;
      adj[ab.first].push_back(na + ab.second);
      adj[na + ab.second].push_back(ab.first);
    }
    std::vector<int> parent(nodes, -2), depth(nodes, 0);
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int v) {
      for (int w : adj[v]) {
        if (w == parent[v]) continue;
        if (parent[w] != -2) {
          if (depth[w] < depth[v]) {
            for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
            cycle.push_back(w);
            return true;
          }
          continue;
        }
        parent[w] = v;
        depth[w] = depth[v] + 1;
        if (dfs(w)) return true;
      }
      return false;
    };
    bool found = false;
    for (int s = 0; s < nodes && !found; ++s) {
      if (parent[s] != -2) continue;
      parent[s] = -1;
      found = dfs(s);
    }
    if (!found) return;

    auto key = [&](int x, int y) {
      return x < na ? std::make_pair(x, y - na) : std::make_pair(y, x - na);
    };
    const int len = static_cast<int>(cycle.size());
    Weight delta = -1;
    for (int i = 1; i < len; i += 2) {
      Weight s = shares[key(cycle[i], cycle[(i + 1) % len])];
      if (delta < 0 || s < delta) delta = s;
    }
    for (int i = 0; i < len; ++i) {
      auto& s = shares[key(cycle[i], cycle[(i + 1) % len])];
      s += (i % 2 == 0) ? delta : -delta;
    }
    std::erase_if(shares, [](const auto& kv) { return kv.second <= 0; });
  }
}

struct Rooted {
  std::vector<int> parent;                 // per b, -1 when b has no share
  std::vector<std::vector<int>> children;  // per b, sorted
};

// Roots every tree of the (acyclic) support at its smallest A vertex.
Rooted root_forest(int na, int nb, const ShareMap& shares) {
  std::vector<std::vector<int>> adj_a(na), adj_b(nb);
  for (const auto& [ab, s] : shares) {
    if (s <= 0) continue;
    adj_a[ab.first].push_back(ab.second);
    adj_b[ab.second].push_back(ab.first);
  }
  Rooted r{std::vector<int>(nb, -1), std::vector<std::vector<int>>(nb)};
  std::vector<bool> seen_a(na, false);
  for (int root = 0; root < na; ++root) {
    if (seen_a[root]) continue;
    seen_a[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : adj_a[a]) {
        if (r.parent[b] != -1) continue;
        r.parent[b] = a;
        for (int child : adj_b[b]) {
          if (child == a) continue;
          r.children[b].push_back(child);
          seen_a[child] = true;
          q.push(child);
        }
        std::sort(r.children[b].begin(), r.children[b].end());
      }
    }
  }
  return r;
}

// Units of each B vertex matched against `a_copies` clones of each A vertex.
struct UnitSolve {
  Replicated rep;
  Matching m;
  Reach z;

  bool any_free_b() const {
    return std::find(m.mate_b.begin(), m.mate_b.end(), kUnmatched) !=
           m.mate_b.end();
  }
  std::vector<bool> a_reached(int na) const {
    std::vector<bool> out(na, false);
    for (int c = 0; c < rep.graph.size_a(); ++c) {
      if (z.a[c]) out[rep.a_origin[c]] = true;
    }
    return out;
  }
  std::vector<bool> b_reached(int nb) const {
    std::vector<bool> out(nb, false);
    for (int u = 0; u < rep.graph.size_b(); ++u) {
      if (z.b[u]) out[rep.b_origin[u]] = true;
    }
    return out;
  }
  ShareMap shares() const {
    ShareMap out;
    for (int u = 0; u < rep.graph.size_b(); ++u) {
      int c = m.mate_b[u];
      if (c != kUnmatched) ++out[{rep.a_origin[c], rep.b_origin[u]}];
    }
    return out;
  }
};

UnitSolve solve_units(const BipartiteGraph& g, const std::vector<int>& a_copies,
                      const std::vector<int>& b_units) {
  UnitSolve s;
  s.rep = replicate(g, a_copies, b_units);
  s.m = max_matching(s.rep.graph);
  s.z = reach_from_free_b(s.rep.graph, s.m);
  return s;
}

std::vector<int> units_of(const std::vector<Weight>& w) {
  std::vector<int> out;
  for (Weight x : w) out.push_back(static_cast<int>(x));
  return out;
}

}  // namespace

ExpansionCertificate expansion_lemma(const BipartiteGraph& g, int q) {
  if (q < 1) throw PreconditionError("expansion: q must be >= 1");
  if (g.size_a() + g.size_b() == 0) {
    throw PreconditionError("expansion: graph is empty");
  }
  if (g.size_b() < static_cast<long long>(q) * g.size_a()) {
    throw PreconditionError("expansion: |B| < q|A|");
  }
  require_no_isolated_b(g, "expansion");

  UnitSolve s = solve_units(g, std::vector<int>(g.size_a(), q), ones(g.size_b()));
  ExpansionCertificate cert;
  cert.q = q;
  std::vector<bool> in_x, in_y;
  if (!s.any_free_b()) {
    in_x.assign(g.size_a(), true);
    in_y.assign(g.size_b(), true);
  } else {
    in_x = s.a_reached(g.size_a());
    in_y = s.b_reached(g.size_b());
  }
  cert.x = marked(in_x);
  cert.y = marked(in_y);
  for (int c = 0; c < s.rep.graph.size_a(); ++c) {
    int a = s.rep.a_origin[c];
    if (in_x[a]) cert.m.push_back({a, s.rep.b_origin[s.m.mate_a[c]]});
  }
  std::sort(cert.m.begin(), cert.m.end());
  return cert;
}

WeightedExpansionCertificate weighted_expansion_lemma(
    const WeightedBipartiteGraph& wg, int q) {
  const BipartiteGraph& g = wg.base();
  if (q < 1) throw PreconditionError("weighted expansion: q must be >= 1");
  if (g.size_a() + g.size_b() == 0) {
    throw PreconditionError("weighted expansion: graph is empty");
  }
  Weight total_b = std::accumulate(wg.weights_b().begin(),
                                   wg.weights_b().end(), Weight{0});
  if (total_b < static_cast<Weight>(q) * g.size_a()) {
    throw PreconditionError("weighted expansion: w(B) < q|A|");
  }
  require_no_isolated_b(g, "weighted expansion");

  UnitSolve s = solve_units(g, std::vector<int>(g.size_a(), q),
                            units_of(wg.weights_b()));
  std::vector<bool> in_x, in_y;
  if (!s.any_free_b()) {
    in_x.assign(g.size_a(), true);
    in_y.assign(g.size_b(), true);
  } else {
    in_x = s.a_reached(g.size_a());
    in_y = s.b_reached(g.size_b());
  }

  ShareMap shares;
  for (const auto& [ab, units] : s.shares()) {
    if (in_x[ab.first]) shares[ab] = units;
  }
  cancel_cycles(g.size_a(), g.size_b(), shares);
  Rooted forest = root_forest(g.size_a(), g.size_b(), shares);

  WeightedExpansionCertificate cert;
  cert.q = q;
  cert.w_cap = wg.w_b_max();
  cert.x = marked(in_x);
  cert.y = marked(in_y);
  cert.f.assign(g.size_b(), kUnmatched);
  for (int b : cert.y) {
    cert.f[b] = forest.parent[b] != -1 ? forest.parent[b]
                                       : g.neighbors_of_b(b).front();
  }
  return cert;
}

StrongerExpansionCertificate stronger_expansion_lemma(const BipartiteGraph& g,
                                                      int q) {
  if (q < 1) throw PreconditionError("stronger expansion: q must be >= 1");
  UnitSolve s = solve_units(g, std::vector<int>(g.size_a(), q), ones(g.size_b()));
  std::vector<bool> in_a = s.a_reached(g.size_a());
  std::vector<bool> in_b = s.b_reached(g.size_b());

  // Grow by A vertices whose clones are all matched, as long as their
  // partners see nothing outside the grown side.
  std::vector<std::vector<int>> partners(g.size_a());
  std::vector<int> matched_copies(g.size_a(), 0);
  for (int c = 0; c < s.rep.graph.size_a(); ++c) {
    int a = s.rep.a_origin[c];
    if (s.m.mate_a[c] != kUnmatched) {
      ++matched_copies[a];
      partners[a].push_back(s.rep.b_origin[s.m.mate_a[c]]);
    }
  }
  std::vector<bool> extra(g.size_a(), false);
  for (int a = 0; a < g.size_a(); ++a) {
    extra[a] = !in_a[a] && matched_copies[a] == q;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < g.size_a(); ++a) {
      if (!extra[a]) continue;
      for (int b : partners[a]) {
        for (int nb : g.neighbors_of_b(b)) {
          if (!in_a[nb] && !extra[nb]) {
            extra[a] = false;
            changed = true;
            break;
          }
        }
        if (!extra[a]) break;
      }
    }
  }
  for (int a = 0; a < g.size_a(); ++a) {
    if (!extra[a]) continue;
    in_a[a] = true;
    for (int b : partners[a]) in_b[b] = true;
  }

  return {marked(in_a), marked(in_b), q};
}

AdditiveExpansionCertificate additive_expansion_lemma(const BipartiteGraph& g,
                                                      int q) {
  if (q < 1) throw PreconditionError("additive expansion: q must be >= 1");
  if (g.size_b() <= static_cast<long long>(q) * g.size_a()) {
    throw PreconditionError("additive expansion: |B| <= q|A|");
  }
  require_no_isolated_b(g, "additive expansion");

  std::vector<bool> in_a(g.size_a(), true), in_b(g.size_b(), true);
  for (;;) {
    auto sub = g.induced(marked(in_a), marked(in_b));
    const BipartiteGraph& h = sub.graph;
    std::optional<std::vector<int>> violator;
    std::vector<int> copies(h.size_a(), 1);
    for (int a = 0; a < h.size_a() && !violator; ++a) {
      copies[a] = q + 1;
      Replicated rep = replicate(h, copies, ones(h.size_b()));
      copies[a] = 1;
      Matching m = max_matching(rep.graph);
      if (m.saturates_a()) continue;
      Reach r = reach_from_free_a(rep.graph, m);
      std::vector<int> x;
      for (int c = 0; c < rep.graph.size_a(); ++c) {
        if (r.a[c]) x.push_back(sub.a_to_old[rep.a_origin[c]]);
      }
      violator = std::move(x);
    }
    if (!violator) break;
    for (int a : *violator) {
      in_a[a] = false;
      for (int b : g.neighbors_of_a(a)) in_b[b] = false;
    }
  }
  return {marked(in_a), marked(in_b), q};
}

BalancedExpansionResult balanced_expansion(const WeightedBipartiteGraph& wg,
                                           Weight q) {
  const BipartiteGraph& g = wg.base();
  const int na = g.size_a(), nb = g.size_b();
  if (na + nb == 0) throw PreconditionError("balanced expansion: graph is empty");
  if (q < wg.w_b_max()) {
    throw PreconditionError("balanced expansion: q < max weight on B");
  }
  require_no_isolated_b(g, "balanced expansion");

  std::vector<int> caps(na);
  std::vector<bool> heavy(na);
  for (int a = 0; a < na; ++a) {
    heavy[a] = wg.weight_a(a) >= q;
    caps[a] = heavy[a] ? 0 : static_cast<int>(q - wg.weight_a(a));
  }
  UnitSolve s = solve_units(g, caps, units_of(wg.weights_b()));
  std::vector<bool> in_a1 = s.a_reached(na);
  std::vector<bool> b_low = s.b_reached(nb);  // B vertices feeding A1
  for (int a = 0; a < na; ++a) {
    if (heavy[a]) in_a1[a] = true;
  }

  if (std::none_of(in_a1.begin(), in_a1.end(), [](bool v) { return v; })) {
    Weight total = std::accumulate(wg.weights_a().begin(),
                                   wg.weights_a().end(), Weight{0}) +
                   std::accumulate(wg.weights_b().begin(),
                                   wg.weights_b().end(), Weight{0});
    // Every clone and every unit is matched: all of A can be heavy.
    if (total >= q * na) {
      in_a1.assign(na, true);
      b_low.assign(nb, true);
    }
  }

  ShareMap low, high;
  for (const auto& [ab, units] : s.shares()) {
    (in_a1[ab.first] ? low : high)[ab] = units;
  }
  cancel_cycles(na, nb, low);
  cancel_cycles(na, nb, high);
  Rooted low_forest = root_forest(na, nb, low);
  Rooted high_forest = root_forest(na, nb, high);

  BalancedExpansionResult res;
  res.q = q;
  res.f.assign(nb, kUnmatched);
  for (int b = 0; b < nb; ++b) {
    if (b_low[b]) {
      int p = low_forest.parent[b];
      if (p == -1) {
        for (int a : g.neighbors_of_b(b)) {
          if (in_a1[a]) {
            p = a;
            break;
          }
        }
      }
      res.f[b] = p;
    } else {
      const auto& kids = high_forest.children[b];
      res.f[b] = kids.empty() ? high_forest.parent[b] : kids.front();
    }
  }
  for (int a = 0; a < na; ++a) (in_a1[a] ? res.a1 : res.a2).push_back(a);
  return res;
}

CrownDecomposition expansion_as_crown(const BipartiteGraph& g,
                                      const ExpansionCertificate& cert) {
  CrownDecomposition cd;
  std::vector<bool> used(g.size_a() + g.size_b(), false);
  for (int b : cert.y) {
    cd.crown.push_back(g.b_vertex(b));
    used[g.b_vertex(b)] = true;
  }
  for (int a : cert.x) {
    cd.head.push_back(g.a_vertex(a));
    used[g.a_vertex(a)] = true;
  }
  for (Vertex v = 0; v < static_cast<int>(used.size()); ++v) {
    if (!used[v]) cd.rest.push_back(v);
  }
  for (const auto& e : cert.m) cd.witness.push_back({g.a_vertex(e.a), g.b_vertex(e.b)});
  std::sort(cd.crown.begin(), cd.crown.end());
  std::sort(cd.head.begin(), cd.head.end());
  return cd;
}

}  // namespace crownkit
