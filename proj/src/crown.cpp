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

#include "crownkit/crown.hpp"

#include <algorithm>
#include <string>

namespace crownkit {

namespace {

CrownDecomposition from_reach(const BipartiteGraph& g, const Matching& m,
                              const Reach& r) {
  CrownDecomposition cd;
  for (int a = 0; a < g.size_a(); ++a) {
    (r.a[a] ? cd.crown : cd.rest).push_back(g.a_vertex(a));
  }
  for (int b = 0; b < g.size_b(); ++b) {
    if (r.b[b]) {
      cd.head.push_back(g.b_vertex(b));
      cd.witness.push_back({g.b_vertex(b), g.a_vertex(m.mate_b[b])});
    } else {
      cd.rest.push_back(g.b_vertex(b));
    }
  }
  std::sort(cd.rest.begin(), cd.rest.end());
  return cd;
}

}  // namespace

std::variant<std::vector<Edge>, CrownDecomposition> crown_or_matching(
    const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k < 0) throw PreconditionError("crown_or_matching: k must be >= 0");
  if (n < 3 * k + 1) {
    throw PreconditionError("crown_or_matching: need at least 3k+1 vertices, have " +
                            std::to_string(n));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionError("crown_or_matching: vertex " + std::to_string(v) +
                              " is isolated");
    }
  }

  // Greedy maximal matching; maximality is all the argument needs.
  std::vector<bool> covered(n, false);
  std::vector<Edge> maximal;
  for (const Edge& e : g.edges()) {
    if (!covered[e.u] && !covered[e.v]) {
      covered[e.u] = covered[e.v] = true;
      maximal.push_back(e);
    }
  }
  if (static_cast<int>(maximal.size()) >= k + 1) {
    maximal.resize(k + 1);
    return maximal;
  }

  // I = uncovered vertices (independent), V_M = covered ones.
  std::vector<Vertex> indep, cover;
  std::vector<int> index(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& side = covered[v] ? cover : indep;
    index[v] = static_cast<int>(side.size());
    side.push_back(v);
  }
  std::vector<BipartiteEdge> edges;
  for (Vertex v : indep) {
    for (Vertex w : g.neighbors(v)) edges.push_back({index[v], index[w]});
  }
  BipartiteGraph aux(static_cast<int>(indep.size()),
                     static_cast<int>(cover.size()), edges);
  Matching m = max_matching(aux);
  if (m.size() >= k + 1) {
    std::vector<Edge> out;
    for (const auto& e : m.edges()) {
      Vertex u = indep[e.a], w = cover[e.b];
      out.push_back({std::min(u, w), std::max(u, w)});
      if (static_cast<int>(out.size()) == k + 1) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Reach r = reach_from_free_a(aux, m);
  CrownDecomposition cd;
  for (Vertex v = 0; v < n; ++v) {
    bool in_z = covered[v] ? r.b[index[v]] : r.a[index[v]];
    if (!in_z) {
      cd.rest.push_back(v);
    } else if (covered[v]) {
      cd.head.push_back(v);
      cd.witness.push_back({v, indep[m.mate_b[index[v]]]});
    } else {
      cd.crown.push_back(v);
    }
  }
  return cd;
}

std::variant<Matching, CrownDecomposition> bipartite_crown(
    const BipartiteGraph& g) {
  if (g.size_b() < g.size_a()) {
    throw PreconditionError("bipartite_crown: |B| < |A|");
  }
  for (int b = 0; b < g.size_b(); ++b) {
    if (g.neighbors_of_b(b).empty()) {
      throw PreconditionError("bipartite_crown: B vertex " + std::to_string(b) +
                              " is isolated");
    }
  }
  for (int a = 0; a < g.size_a(); ++a) {
    if (g.neighbors_of_a(a).empty()) {
      throw PreconditionError("bipartite_crown: A vertex " + std::to_string(a) +
                              " is isolated");
    }
  }
  Matching m = max_matching(g);
  if (m.saturates_a()) return m;

  int root = 0;
  while (m.mate_a[root] != kUnmatched) ++root;
  const int roots[] = {root};
  return from_reach(g, m, reach_from_a(g, m, roots));
}

CrownDecomposition crown_from_deficiency(const BipartiteGraph& g,
                                         const Matching& m) {
  if (m.saturates_a()) {
    throw PreconditionError("crown_from_deficiency: matching saturates A");
  }
  return from_reach(g, m, reach_from_free_a(g, m));
}

bool verify_crown(const Graph& host, const CrownDecomposition& cd) {
  const int n = host.num_vertices();
  if (cd.crown.empty()) return false;
  enum Part : char { kNone, kCrown, kHead, kRest };
  std::vector<char> part(n, kNone);
  auto place = [&](const std::vector<Vertex>& vs, Part p) {
    for (Vertex v : vs) {
      if (v < 0 || v >= n || part[v] != kNone) return false;
      part[v] = p;
    }
    return true;
  };
  if (!place(cd.crown, kCrown) || !place(cd.head, kHead) ||
      !place(cd.rest, kRest)) {
    return false;
  }
  if (std::count(part.begin(), part.end(), kNone) != 0) return false;

  for (const Edge& e : host.edges()) {
    char pu = part[e.u], pv = part[e.v];
    if (pu == kCrown && (pv == kCrown || pv == kRest)) return false;
    if (pv == kCrown && pu == kRest) return false;
  }

  std::vector<bool> head_used(n, false), crown_used(n, false);
  for (const Edge& e : cd.witness) {
    Vertex h = e.u, c = e.v;
    if (h < 0 || h >= n || c < 0 || c >= n) return false;
    if (part[h] != kHead || part[c] != kCrown) return false;
    if (head_used[h] || crown_used[c] || !host.adjacent(h, c)) return false;
    head_used[h] = crown_used[c] = true;
  }
  return cd.witness.size() == cd.head.size();
}

bool verify_crown(const BipartiteGraph& host, const CrownDecomposition& cd) {
  return verify_crown(host.as_graph(), cd);
}

}  // namespace crownkit
