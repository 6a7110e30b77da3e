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

#include "crownkit/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>

#include "crownkit/bipartite.hpp"
#include "crownkit/crown.hpp"
#include "crownkit/expansion.hpp"
#include "crownkit/matching.hpp"

namespace crownkit {

namespace {

std::string id_list(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i] + 1;
  return out.str();
}

// The graph under reduction together with the original id of every vertex.
struct Work {
  explicit Work(const Graph& g0) : g(g0), orig(g0.num_vertices()) {
    std::iota(orig.begin(), orig.end(), 0);
  }

  std::vector<Vertex> to_orig(std::vector<Vertex> cur) const {
    for (Vertex& v : cur) v = orig[v];
    std::sort(cur.begin(), cur.end());
    return cur;
  }

  IdMap remove(const std::vector<Vertex>& cur) {
    InducedSubgraph sub = delete_vertices(g, cur);
    std::vector<Vertex> next;
    for (Vertex v : sub.ids.to_old) next.push_back(orig[v]);
    orig = std::move(next);
    g = std::move(sub.graph);
    return std::move(sub.ids);
  }

  Graph g;
  std::vector<Vertex> orig;
};

KernelOutcome decide(KernelOutcome& out, bool answer) {
  out.decided = answer;
  out.reduced.reset();
  out.surviving.clear();
  return std::move(out);
}

std::string crown_text(const std::vector<Vertex>& head,
                       const std::vector<Vertex>& crown,
                       const std::vector<std::pair<Vertex, Vertex>>& witness) {
  std::ostringstream out;
  out << "C=" << id_list(crown) << ";H=" << id_list(head) << ";M=";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    out << (i ? "," : "") << witness[i].first + 1 << '-' << witness[i].second + 1;
  }
  return out.str();
}

// Crown of a graph under reduction, in original ids.
std::string graph_crown_text(const Work& w, const CrownDecomposition& cd) {
  std::vector<std::pair<Vertex, Vertex>> wit;
  for (const Edge& e : cd.witness) wit.push_back({w.orig[e.u], w.orig[e.v]});
  return crown_text(w.to_orig(cd.head), w.to_orig(cd.crown), wit);
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Edge> maximal_matching(const Graph& g) {
  std::vector<bool> covered(g.num_vertices(), false);
  std::vector<Edge> m;
  for (const Edge& e : g.edges()) {
    if (!covered[e.u] && !covered[e.v]) {
      covered[e.u] = covered[e.v] = true;
      m.push_back(e);
    }
  }
  return m;
}

ProblemInstance graph_instance(Problem problem, Graph g, int k) {
  ProblemInstance inst;
  inst.problem = problem;
  inst.payload = std::move(g);
  inst.k = k;
  return inst;
}

// Bipartite graph between modulator vertices and the components that
// avoid it. Edge when the vertex touches the component.
BipartiteGraph modulator_graph(const Graph& g, const std::vector<Vertex>& x,
                               const std::vector<std::vector<Vertex>>& comps) {
  std::vector<int> comp_of(g.num_vertices(), -1);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = c;
  }
  std::vector<BipartiteEdge> edges;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    std::vector<int> seen;
    for (Vertex u : g.neighbors(x[i])) {
      if (comp_of[u] >= 0) seen.push_back(comp_of[u]);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (int c : seen) edges.push_back({i, c});
  }
  return BipartiteGraph(static_cast<int>(x.size()),
                        static_cast<int>(comps.size()), edges);
}

// Drops components with no neighbour in the modulator. Returns true when
// anything was removed.
bool drop_detached(Work& w, const std::vector<Vertex>& x,
                   const std::vector<std::vector<Vertex>>& comps,
                   const std::string& rule, KernelOutcome& out) {
  std::vector<bool> in_x(w.g.num_vertices(), false);
  for (Vertex v : x) in_x[v] = true;
  std::vector<Vertex> drop;
  for (const auto& comp : comps) {
    bool touches = false;
    for (Vertex v : comp) {
      for (Vertex u : w.g.neighbors(v)) touches = touches || in_x[u];
    }
    if (!touches) drop.insert(drop.end(), comp.begin(), comp.end());
  }
  if (drop.empty()) return false;
  RuleApplication r;
  r.rule = rule;
  r.deleted_vertices = w.to_orig(drop);
  out.trace.push_back(std::move(r));
  w.remove(drop);
  return true;
}

// Takes `head` (indices into x) into the solution and deletes it together
// with the listed components.
void apply_expansion(Work& w, int& k, const std::vector<Vertex>& x,
                     const std::vector<std::vector<Vertex>>& comps,
                     const std::vector<int>& head, const std::vector<int>& crown,
                     const std::string& rule, KernelOutcome& out) {
  std::vector<Vertex> h, drop;
  for (int i : head) h.push_back(x[i]);
  drop = h;
  std::ostringstream cert;
  cert << "H=" << id_list(w.to_orig(h)) << ";Y=";
  for (std::size_t i = 0; i < crown.size(); ++i) {
    const auto& comp = comps[crown[i]];
    drop.insert(drop.end(), comp.begin(), comp.end());
    std::vector<Vertex> o = w.to_orig(comp);
    cert << (i ? "|" : "");
    for (std::size_t j = 0; j < o.size(); ++j) cert << (j ? "+" : "") << o[j] + 1;
  }
  RuleApplication r;
  r.rule = rule;
  r.certificate = cert.str();
  r.deleted_vertices = w.to_orig(drop);
  r.budget_delta = -static_cast<int>(h.size());
  out.trace.push_back(std::move(r));
  k -= static_cast<int>(h.size());
  w.remove(drop);
}

}  // namespace

std::vector<std::vector<Vertex>> components_outside(
    const Graph& g, const std::vector<Vertex>& modulator) {
  InducedSubgraph rest = delete_vertices(g, modulator);
  std::vector<std::vector<Vertex>> comps = connected_components(rest.graph);
  for (auto& comp : comps) {
    for (Vertex& v : comp) v = rest.ids.to_old[v];
  }
  return comps;
}

std::vector<std::vector<Vertex>> greedy_connected_packing(const Graph& g,
                                                          int p) {
  const int n = g.num_vertices();
  std::vector<bool> used(n, false), small(n, false);
  std::vector<std::vector<Vertex>> sets;
  for (Vertex s = 0; s < n; ++s) {
    if (used[s] || small[s]) continue;
    std::vector<Vertex> order{s};
    std::vector<bool> seen(n, false);
    seen[s] = true;
    for (std::size_t head = 0;
         head < order.size() && static_cast<int>(order.size()) < p + 1; ++head) {
      for (Vertex u : g.neighbors(order[head])) {
        if (used[u] || seen[u]) continue;
        seen[u] = true;
        order.push_back(u);
        if (static_cast<int>(order.size()) == p + 1) break;
      }
    }
    if (static_cast<int>(order.size()) == p + 1) {
      for (Vertex v : order) used[v] = true;
      std::sort(order.begin(), order.end());
      sets.push_back(std::move(order));
    } else {
      for (Vertex v : order) small[v] = true;
    }
  }
  return sets;
}

std::vector<std::array<Vertex, 3>> greedy_p3_packing(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> used(n, false);
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n && !used[u]; ++v) {
      if (used[v]) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        if (used[w]) continue;
        int edges = g.adjacent(u, v) + g.adjacent(u, w) + g.adjacent(v, w);
        if (edges == 2) {
          used[u] = used[v] = used[w] = true;
          out.push_back({u, v, w});
          break;
        }
      }
    }
  }
  return out;
}

KernelOutcome kernelize_vertex_cover(const Graph& g0, int k) {
  Work w(g0);
  KernelOutcome out;
  for (;;) {
    if (k < 0) return decide(out, false);
    if (auto iso = isolated_vertices(w.g); !iso.empty()) {
      RuleApplication r;
      r.rule = "isolated";
      r.deleted_vertices = w.to_orig(iso);
      out.trace.push_back(std::move(r));
      w.remove(iso);
      continue;
    }
    if (w.g.num_edges() == 0) return decide(out, true);

    auto large_matching = [&](const std::vector<Edge>& m) {
      RuleApplication r;
      r.rule = "large-matching";
      std::ostringstream cert;
      for (std::size_t i = 0; i < m.size(); ++i) {
        cert << (i ? "," : "") << w.orig[m[i].u] + 1 << '-' << w.orig[m[i].v] + 1;
      }
      r.certificate = "M=" + cert.str();
      out.trace.push_back(std::move(r));
      return decide(out, false);
    };
    if (w.g.num_vertices() <= 3 * k) {
      // Small already; still reject when k+1 disjoint edges are in plain sight.
      std::vector<Edge> m = maximal_matching(w.g);
      if (static_cast<int>(m.size()) <= k) break;
      m.resize(k + 1);
      return large_matching(m);
    }

    auto res = crown_or_matching(w.g, k);
    if (auto* m = std::get_if<std::vector<Edge>>(&res)) return large_matching(*m);
    const auto& cd = std::get<CrownDecomposition>(res);
    std::vector<Vertex> drop = cd.crown;
    drop.insert(drop.end(), cd.head.begin(), cd.head.end());
    RuleApplication r;
    r.rule = "crown";
    r.certificate = graph_crown_text(w, cd);
    r.deleted_vertices = w.to_orig(drop);
    r.budget_delta = -static_cast<int>(cd.head.size());
    out.trace.push_back(std::move(r));
    k -= static_cast<int>(cd.head.size());
    w.remove(drop);
  }
  out.reduced = graph_instance(Problem::vertex_cover, w.g, k);
  out.surviving = w.orig;
  return out;
}

KernelOutcome kernelize_nk_coloring(const Graph& g0, int k) {
  Work w(g0);
  KernelOutcome out;
  for (;;) {
    const int n = w.g.num_vertices();
    if (k <= 0) return decide(out, true);
    if (k >= n) return decide(out, false);
    if (w.g.num_edges() == 0) return decide(out, true);  // one color suffices
    std::vector<Vertex> universal;
    for (Vertex v = 0; v < n; ++v) {
      if (w.g.degree(v) == n - 1) universal.push_back(v);
    }
    if (!universal.empty()) {
      RuleApplication r;
      r.rule = "universal";
      r.deleted_vertices = w.to_orig(universal);
      out.trace.push_back(std::move(r));
      w.remove(universal);
      continue;
    }
    if (n < 3 * k - 2) break;

    Graph co = complement(w.g);
    auto res = crown_or_matching(co, k - 1);
    if (std::holds_alternative<std::vector<Edge>>(res)) {
      RuleApplication r;
      r.rule = "complement-matching";
      std::ostringstream cert;
      const auto& m = std::get<std::vector<Edge>>(res);
      for (std::size_t i = 0; i < m.size(); ++i) {
        cert << (i ? "," : "") << w.orig[m[i].u] + 1 << '-' << w.orig[m[i].v] + 1;
      }
      r.certificate = "M=" + cert.str();
      out.trace.push_back(std::move(r));
      return decide(out, true);
    }
    const auto& cd = std::get<CrownDecomposition>(res);
    std::vector<Vertex> drop = cd.crown;
    drop.insert(drop.end(), cd.head.begin(), cd.head.end());
    RuleApplication r;
    r.rule = "complement-crown";
    r.certificate = graph_crown_text(w, cd);
    r.deleted_vertices = w.to_orig(drop);
    r.budget_delta = -static_cast<int>(cd.head.size());
    out.trace.push_back(std::move(r));
    k -= static_cast<int>(cd.head.size());
    w.remove(drop);
  }
  out.reduced = graph_instance(Problem::nk_coloring, w.g, k);
  out.surviving = w.orig;
  return out;
}

KernelOutcome kernelize_maxsat(const CnfFormula& f0, int k) {
  CnfFormula f = f0;
  std::vector<int> orig_var(f.num_vars() + 1), orig_clause(f.num_clauses());
  std::iota(orig_var.begin(), orig_var.end(), 0);
  std::iota(orig_clause.begin(), orig_clause.end(), 0);
  KernelOutcome out;

  // Removes the given current variables (1-based) and clauses (0-based).
  auto shrink = [&](const std::vector<bool>& var_gone,
                    const std::vector<bool>& clause_gone) {
    std::vector<int> renumber(f.num_vars() + 1, 0);
    std::vector<int> next_var{0};
    for (int v = 1; v <= f.num_vars(); ++v) {
      if (var_gone[v]) continue;
      renumber[v] = static_cast<int>(next_var.size());
      next_var.push_back(orig_var[v]);
    }
    std::vector<Clause> clauses;
    std::vector<int> next_clause;
    for (int i = 0; i < f.num_clauses(); ++i) {
      if (clause_gone[i]) continue;
      Clause c;
      for (Literal lit : f.clause(i)) {
        c.push_back(lit > 0 ? renumber[lit] : -renumber[-lit]);
      }
      clauses.push_back(std::move(c));
      next_clause.push_back(orig_clause[i]);
    }
    f = CnfFormula(static_cast<int>(next_var.size()) - 1, std::move(clauses));
    orig_var = std::move(next_var);
    orig_clause = std::move(next_clause);
  };

  for (;;) {
    const int n = f.num_vars(), m = f.num_clauses();
    if (k <= 0) return decide(out, true);
    if (2 * k <= m) return decide(out, true);
    if (k > m) return decide(out, false);

    std::vector<bool> used(n + 1, false);
    for (const Clause& c : f.clauses()) {
      for (Literal lit : c) used[std::abs(lit)] = true;
    }
    if (std::count(used.begin() + 1, used.end(), false) > 0) {
      RuleApplication r;
      r.rule = "unused-variables";
      std::vector<bool> gone(n + 1, false);
      for (int v = 1; v <= n; ++v) {
        if (!used[v]) {
          gone[v] = true;
          r.deleted_variables.push_back(orig_var[v]);
        }
      }
      out.trace.push_back(std::move(r));
      shrink(gone, std::vector<bool>(m, false));
      continue;
    }
    if (n < k) break;

    std::vector<BipartiteEdge> edges;
    for (int i = 0; i < m; ++i) {
      for (Literal lit : f.clause(i)) edges.push_back({std::abs(lit) - 1, i});
    }
    BipartiteGraph bg(n, m, edges);
    Matching mm = max_matching(bg);
    if (mm.size() >= k) {
      RuleApplication r;
      r.rule = "variable-matching";
      std::ostringstream cert;
      bool first = true;
      for (const auto& e : mm.edges()) {
        cert << (first ? "" : ",") << 'x' << orig_var[e.a + 1] << "-c"
             << orig_clause[e.b] + 1;
        first = false;
      }
      r.certificate = "M=" + cert.str();
      out.trace.push_back(std::move(r));
      return decide(out, true);
    }

    CrownDecomposition cd = crown_from_deficiency(bg, mm);
    std::vector<bool> var_gone(n + 1, false), clause_gone(m, false);
    RuleApplication r;
    r.rule = "crown";
    std::ostringstream cert;
    cert << "C=";
    for (std::size_t i = 0; i < cd.crown.size(); ++i) {
      int v = cd.crown[i] + 1;
      var_gone[v] = true;
      r.deleted_variables.push_back(orig_var[v]);
      cert << (i ? "," : "") << 'x' << orig_var[v];
    }
    cert << ";H=";
    for (std::size_t i = 0; i < cd.head.size(); ++i) {
      int c = cd.head[i] - n;
      clause_gone[c] = true;
      r.deleted_clauses.push_back(orig_clause[c]);
      cert << (i ? "," : "") << 'c' << orig_clause[c] + 1;
    }
    cert << ";M=";
    for (std::size_t i = 0; i < cd.witness.size(); ++i) {
      cert << (i ? "," : "") << 'c' << orig_clause[cd.witness[i].u - n] + 1
           << "-x" << orig_var[cd.witness[i].v + 1];
    }
    std::sort(r.deleted_variables.begin(), r.deleted_variables.end());
    std::sort(r.deleted_clauses.begin(), r.deleted_clauses.end());
    r.certificate = cert.str();
    r.budget_delta = -static_cast<int>(cd.head.size());
    out.trace.push_back(std::move(r));
    k -= static_cast<int>(cd.head.size());
    shrink(var_gone, clause_gone);
  }

  ProblemInstance inst;
  inst.problem = Problem::maxsat;
  inst.payload = f;
  inst.k = k;
  out.reduced = std::move(inst);
  out.surviving.assign(orig_var.begin() + 1, orig_var.end());
  return out;
}

KernelOutcome reduce_list_coloring_colors(
    const Graph& g0, int k, const std::vector<std::vector<int>>& lists0) {
  const int list_size = g0.num_vertices() - k;
  if (static_cast<int>(lists0.size()) != g0.num_vertices()) {
    throw PreconditionError("list coloring: one list per vertex required");
  }
  for (const auto& l : lists0) {
    if (static_cast<int>(l.size()) != list_size) {
      throw PreconditionError("list coloring: every list must have n-k colors");
    }
  }
  Work w(g0);
  std::vector<std::vector<int>> lists = lists0;
  for (auto& l : lists) std::sort(l.begin(), l.end());
  KernelOutcome out;

  for (;;) {
    const int n = w.g.num_vertices();
    // Lists of at least n colors always admit a greedy coloring.
    if (n == 0 || k <= 0) return decide(out, true);
    if (k >= n) return decide(out, false);

    std::vector<int> colors;
    for (const auto& l : lists) colors.insert(colors.end(), l.begin(), l.end());
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    const int nc = static_cast<int>(colors.size());
    std::vector<BipartiteEdge> edges;
    for (Vertex v = 0; v < n; ++v) {
      for (int c : lists[v]) {
        int idx = static_cast<int>(
            std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
        edges.push_back({idx, v});
      }
    }
    BipartiteGraph bg(nc, n, edges);
    Matching m = max_matching(bg);
    if (m.saturates_a()) break;

    CrownDecomposition cd = crown_from_deficiency(bg, m);
    RuleApplication r;
    r.rule = "color-crown";
    std::vector<Vertex> head;
    for (Vertex hv : cd.head) head.push_back(hv - nc);
    std::ostringstream cert;
    cert << "C=";
    for (std::size_t i = 0; i < cd.crown.size(); ++i) {
      cert << (i ? "," : "") << colors[cd.crown[i]];
    }
    cert << ";H=" << id_list(w.to_orig(head));
    r.certificate = cert.str();
    for (const Edge& e : cd.witness) {
      r.precolored.push_back({w.orig[e.u - nc], colors[e.v]});
    }
    std::sort(r.precolored.begin(), r.precolored.end());
    r.deleted_vertices = w.to_orig(head);
    r.budget_delta = -static_cast<int>(head.size());
    out.trace.push_back(std::move(r));
    k -= static_cast<int>(head.size());
    IdMap ids = w.remove(head);
    std::vector<std::vector<int>> next;
    for (Vertex old : ids.to_old) next.push_back(std::move(lists[old]));
    lists = std::move(next);
  }

  ProblemInstance inst = graph_instance(Problem::nk_list_coloring, w.g, k);
  inst.lists = lists;
  out.reduced = std::move(inst);
  out.surviving = w.orig;
  return out;
}

KernelOutcome reduce_longest_cycle_vc(const Graph& g0, int k, int ell,
                                      const std::vector<Vertex>& s0) {
  std::vector<Vertex> s = s0;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    if (v < 0 || v >= g0.num_vertices()) {
      throw PreconditionError("longest cycle: modulator vertex out of range");
    }
  }
  if (!is_vertex_cover(g0, s)) {
    throw PreconditionError("longest cycle: S is not a vertex cover");
  }
  if (static_cast<int>(s.size()) != k) {
    throw PreconditionError("longest cycle: |S| must equal k");
  }
  Work w(g0);
  std::vector<bool> in_s(g0.num_vertices(), false);
  for (Vertex v : s) in_s[v] = true;
  KernelOutcome out;
  if (ell < 3 || ell > g0.num_vertices()) return decide(out, false);
  // Two routes through the same pair only happen on a 4-cycle.
  const int copies = ell == 4 ? 2 : 1;

  for (;;) {
    const int n = w.g.num_vertices();
    std::vector<Vertex> indep;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_s[v]) indep.push_back(v);
    }
    std::map<std::pair<Vertex, Vertex>, int> pair_index;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<BipartiteEdge> edges;
    for (int i = 0; i < static_cast<int>(indep.size()); ++i) {
      auto nb = w.g.neighbors(indep[i]);
      for (std::size_t x = 0; x < nb.size(); ++x) {
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
          auto key = std::make_pair(nb[x], nb[y]);
          auto [it, fresh] =
              pair_index.emplace(key, static_cast<int>(pairs.size()));
          if (fresh) pairs.push_back(key);
          for (int c = 0; c < copies; ++c) {
            edges.push_back({i, it->second * copies + c});
          }
        }
      }
    }
    BipartiteGraph bg(static_cast<int>(indep.size()),
                      static_cast<int>(pairs.size()) * copies, edges);
    Matching m = max_matching(bg);
    if (m.saturates_a()) break;

    CrownDecomposition cd = crown_from_deficiency(bg, m);
    std::vector<Vertex> drop, crown_v;
    for (int i = 0; i < bg.size_a(); ++i) {
      if (m.mate_a[i] == kUnmatched) drop.push_back(indep[i]);
    }
    for (Vertex c : cd.crown) crown_v.push_back(indep[c]);
    std::ostringstream cert;
    cert << "C=" << id_list(w.to_orig(crown_v)) << ";H=";
    for (std::size_t i = 0; i < cd.head.size(); ++i) {
      const auto& pr = pairs[(cd.head[i] - bg.size_a()) / copies];
      cert << (i ? "," : "") << w.orig[pr.first] + 1 << '+' << w.orig[pr.second] + 1;
    }
    RuleApplication r;
    r.rule = "unmatched-crown-vertex";
    r.certificate = cert.str();
    r.deleted_vertices = w.to_orig(drop);
    out.trace.push_back(std::move(r));
    IdMap ids = w.remove(drop);
    std::vector<bool> next(ids.to_old.size());
    for (std::size_t i = 0; i < ids.to_old.size(); ++i) next[i] = in_s[ids.to_old[i]];
    in_s = std::move(next);
  }

  ProblemInstance inst = graph_instance(Problem::longest_cycle_vc, w.g, k);
  inst.ell = ell;
  std::vector<Vertex> mod;
  for (Vertex v = 0; v < w.g.num_vertices(); ++v) {
    if (in_s[v]) mod.push_back(v);
  }
  inst.modulator = std::move(mod);
  out.reduced = std::move(inst);
  out.surviving = w.orig;
  return out;
}

namespace {

std::vector<Vertex> flatten(const std::vector<std::vector<Vertex>>& sets) {
  std::vector<Vertex> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

KernelOutcome pcoc_common(const Graph& g0, int k, int p, bool weighted) {
  if (p < 1) throw PreconditionError("p-component order connectivity: p >= 1");
  Work w(g0);
  KernelOutcome out;
  for (;;) {
    if (k < 0) return decide(out, false);
    auto packing = greedy_connected_packing(w.g, p);
    if (static_cast<int>(packing.size()) > k) return decide(out, false);
    std::vector<Vertex> x = flatten(packing);
    if (x.empty()) return decide(out, true);
    auto comps = components_outside(w.g, x);
    if (drop_detached(w, x, comps, "detached-component", out)) continue;

    BipartiteGraph q = modulator_graph(w.g, x, comps);
    const long long nx = static_cast<long long>(x.size());
    if (!weighted) {
      if (static_cast<long long>(comps.size()) < p * nx) break;
      ExpansionCertificate cert = expansion_lemma(q, p);
      apply_expansion(w, k, x, comps, cert.x, cert.y, "expansion", out);
    } else {
      std::vector<Weight> wb;
      Weight total = 0;
      for (const auto& c : comps) {
        wb.push_back(static_cast<Weight>(c.size()));
        total += static_cast<Weight>(c.size());
      }
      const int qq = 2 * p - 1;
      if (total < qq * nx) break;
      WeightedBipartiteGraph wq(q, std::vector<Weight>(x.size(), 1), wb);
      WeightedExpansionCertificate cert = weighted_expansion_lemma(wq, qq);
      apply_expansion(w, k, x, comps, cert.x, cert.y, "weighted-expansion", out);
    }
  }
  ProblemInstance inst = graph_instance(
      weighted ? Problem::pcoc_weighted : Problem::pcoc, w.g, k);
  inst.p = p;
  out.reduced = std::move(inst);
  out.surviving = w.orig;
  return out;
}

}  // namespace

KernelOutcome kernelize_pcoc(const Graph& g, int k, int p) {
  return pcoc_common(g, k, p, false);
}

KernelOutcome kernelize_pcoc_weighted(const Graph& g, int k, int p) {
  return pcoc_common(g, k, p, true);
}

KernelOutcome bound_cvd_cliques(const Graph& g0, int k) {
  Work w(g0);
  KernelOutcome out;
  for (;;) {
    if (k < 0) return decide(out, false);
    auto packing = greedy_p3_packing(w.g);
    if (static_cast<int>(packing.size()) > k) return decide(out, false);
    std::vector<Vertex> s;
    for (const auto& t : packing) s.insert(s.end(), t.begin(), t.end());
    std::sort(s.begin(), s.end());
    if (s.empty()) return decide(out, true);
    auto cliques = components_outside(w.g, s);
    if (drop_detached(w, s, cliques, "isolated-clique", out)) continue;
    if (cliques.size() < 2 * s.size()) break;
    ExpansionCertificate cert = expansion_lemma(modulator_graph(w.g, s, cliques), 2);
    apply_expansion(w, k, s, cliques, cert.x, cert.y, "expansion", out);
  }
  out.reduced = graph_instance(Problem::cvd_clique_bound, w.g, k);
  out.surviving = w.orig;
  return out;
}

KernelOutcome kernelize(const ProblemInstance& inst) {
  inst.validate();
  switch (inst.problem) {
    case Problem::vertex_cover:
      return kernelize_vertex_cover(inst.graph(), inst.k);
    case Problem::nk_coloring:
      return kernelize_nk_coloring(inst.graph(), inst.k);
    case Problem::maxsat:
      return kernelize_maxsat(inst.formula(), inst.k);
    case Problem::nk_list_coloring:
      return reduce_list_coloring_colors(inst.graph(), inst.k, *inst.lists);
    case Problem::longest_cycle_vc:
      return reduce_longest_cycle_vc(inst.graph(), inst.k, *inst.ell,
                                     *inst.modulator);
    case Problem::pcoc:
      return kernelize_pcoc(inst.graph(), inst.k, *inst.p);
    case Problem::pcoc_weighted:
      return kernelize_pcoc_weighted(inst.graph(), inst.k, *inst.p);
    case Problem::cvd_clique_bound:
      return bound_cvd_cliques(inst.graph(), inst.k);
  }
  throw PreconditionError("unknown problem");
}

}  // namespace crownkit
