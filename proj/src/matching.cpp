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

#include "crownkit/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace crownkit {

int Matching::size() const {
  return static_cast<int>(
      std::count_if(mate_a.begin(), mate_a.end(),
                    [](int b) { return b != kUnmatched; }));
}

std::vector<BipartiteEdge> Matching::edges() const {
  std::vector<BipartiteEdge> out;
  for (int a = 0; a < static_cast<int>(mate_a.size()); ++a) {
    if (mate_a[a] != kUnmatched) out.push_back({a, mate_a[a]});
  }
  return out;
}

bool Matching::saturates_a() const {
  return std::all_of(mate_a.begin(), mate_a.end(),
                     [](int b) { return b != kUnmatched; });
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g) : g_(g) {
    m_.mate_a.assign(g.size_a(), kUnmatched);
    m_.mate_b.assign(g.size_b(), kUnmatched);
    dist_.assign(g.size_a(), kInf);
    cursor_.assign(g.size_a(), 0);
  }

  Matching run() {
    while (bfs()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (int a = 0; a < g_.size_a(); ++a) {
        if (m_.mate_a[a] == kUnmatched) dfs(a);
      }
    }
    return std::move(m_);
  }

 private:
  bool bfs() {
    std::queue<int> q;
    for (int a = 0; a < g_.size_a(); ++a) {
      if (m_.mate_a[a] == kUnmatched) {
        dist_[a] = 0;
        q.push(a);
      } else {
        dist_[a] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : g_.neighbors_of_a(a)) {
        int next = m_.mate_b[b];
        if (next == kUnmatched) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[a] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int a) {
    auto adj = g_.neighbors_of_a(a);
    for (int& i = cursor_[a]; i < static_cast<int>(adj.size()); ++i) {
      int b = adj[i];
      int next = m_.mate_b[b];
      if (next == kUnmatched ||
          (dist_[next] == dist_[a] + 1 && dfs(next))) {
        m_.mate_a[a] = b;
        m_.mate_b[b] = a;
        ++i;
        return true;
      }
    }
    dist_[a] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  Matching m_;
  std::vector<int> dist_;
  std::vector<int> cursor_;
};

}  // namespace

Matching max_matching(const BipartiteGraph& g) { return HopcroftKarp(g).run(); }

bool is_matching(const BipartiteGraph& g, const Matching& m) {
  if (static_cast<int>(m.mate_a.size()) != g.size_a() ||
      static_cast<int>(m.mate_b.size()) != g.size_b()) {
    return false;
  }
  for (int a = 0; a < g.size_a(); ++a) {
    int b = m.mate_a[a];
    if (b == kUnmatched) continue;
    if (b < 0 || b >= g.size_b() || m.mate_b[b] != a || !g.adjacent(a, b)) {
      return false;
    }
  }
  for (int b = 0; b < g.size_b(); ++b) {
    int a = m.mate_b[b];
    if (a != kUnmatched && (a < 0 || a >= g.size_a() || m.mate_a[a] != b)) {
      return false;
    }
  }
  return true;
}

Reach reach_from_a(const BipartiteGraph& g, const Matching& m,
                   std::span<const int> roots) {
  Reach r{std::vector<bool>(g.size_a(), false),
          std::vector<bool>(g.size_b(), false)};
  std::vector<int> stack;
  for (int a : roots) {
    if (!r.a[a]) {
      r.a[a] = true;
      stack.push_back(a);
    }
  }
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : g.neighbors_of_a(a)) {
      if (r.b[b]) continue;
      r.b[b] = true;
      int next = m.mate_b[b];
      if (next != kUnmatched && !r.a[next]) {
        r.a[next] = true;
        stack.push_back(next);
      }
    }
  }
  return r;
}

Reach reach_from_free_a(const BipartiteGraph& g, const Matching& m) {
  std::vector<int> roots;
  for (int a = 0; a < g.size_a(); ++a) {
    if (m.mate_a[a] == kUnmatched) roots.push_back(a);
  }
  return reach_from_a(g, m, roots);
}

Reach reach_from_free_b(const BipartiteGraph& g, const Matching& m) {
  Reach r{std::vector<bool>(g.size_a(), false),
          std::vector<bool>(g.size_b(), false)};
  std::vector<int> stack;
  for (int b = 0; b < g.size_b(); ++b) {
    if (m.mate_b[b] == kUnmatched) {
      r.b[b] = true;
      stack.push_back(b);
    }
  }
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    for (int a : g.neighbors_of_b(b)) {
      if (r.a[a]) continue;
      r.a[a] = true;
      int next = m.mate_a[a];
      if (next != kUnmatched && !r.b[next]) {
        r.b[next] = true;
        stack.push_back(next);
      }
    }
  }
  return r;
}

std::optional<HallViolator> minimal_hall_set(const BipartiteGraph& g) {
  Matching m = max_matching(g);
  int root = kUnmatched;
  for (int a = 0; a < g.size_a(); ++a) {
    if (m.mate_a[a] == kUnmatched) {
      root = a;
      break;
    }
  }
  if (root == kUnmatched) return std::nullopt;
  const int roots[] = {root};
  Reach r = reach_from_a(g, m, roots);
  HallViolator v;
  for (int a = 0; a < g.size_a(); ++a) {
    if (r.a[a]) v.x.push_back(a);
  }
  for (int b = 0; b < g.size_b(); ++b) {
    if (r.b[b]) v.neighborhood.push_back(b);
  }
  return v;
}

Replicated replicate(const BipartiteGraph& g, std::span<const int> a_copies,
                     std::span<const int> b_copies) {
  Replicated out;
  std::vector<int> first_a(g.size_a()), first_b(g.size_b());
  for (int a = 0; a < g.size_a(); ++a) {
    first_a[a] = static_cast<int>(out.a_origin.size());
    for (int c = 0; c < a_copies[a]; ++c) out.a_origin.push_back(a);
  }
  for (int b = 0; b < g.size_b(); ++b) {
    first_b[b] = static_cast<int>(out.b_origin.size());
    for (int c = 0; c < b_copies[b]; ++c) out.b_origin.push_back(b);
  }
  std::vector<BipartiteEdge> edges;
  for (int a = 0; a < g.size_a(); ++a) {
    for (int ca = 0; ca < a_copies[a]; ++ca) {
      for (int b : g.neighbors_of_a(a)) {
        for (int cb = 0; cb < b_copies[b]; ++cb) {
          edges.push_back({first_a[a] + ca, first_b[b] + cb});
        }
      }
    }
  }
  out.graph = BipartiteGraph(static_cast<int>(out.a_origin.size()),
                             static_cast<int>(out.b_origin.size()), edges);
  return out;
}

CapacitatedAssignment capacitated_assignment(const BipartiteGraph& g,
                                             std::span<const int> cap_a) {
  std::vector<int> ones(g.size_b(), 1);
  Replicated rep = replicate(g, cap_a, ones);
  Matching m = max_matching(rep.graph);
  CapacitatedAssignment out;
  out.owner_of_b.assign(g.size_b(), kUnmatched);
  out.load.assign(g.size_a(), 0);
  for (int b = 0; b < g.size_b(); ++b) {
    int copy = m.mate_b[b];
    if (copy == kUnmatched) continue;
    int a = rep.a_origin[copy];
    out.owner_of_b[b] = a;
    ++out.load[a];
    ++out.total;
  }
  return out;
}

bool has_surplus_q(const BipartiteGraph& g, int q) {
  if (g.size_a() == 0) return true;
  std::vector<int> a_copies(g.size_a(), 1);
  std::vector<int> ones(g.size_b(), 1);
  if (q == 0) return max_matching(g).saturates_a();
  for (int a = 0; a < g.size_a(); ++a) {
    a_copies[a] = 1 + q;
    Replicated rep = replicate(g, a_copies, ones);
    a_copies[a] = 1;
    if (!max_matching(rep.graph).saturates_a()) return false;
  }
  return true;
}

}  // namespace crownkit
