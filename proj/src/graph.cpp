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

#include "crownkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace crownkit {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  adjacency_.resize(num_vertices);
}

Graph::Graph(int num_vertices, std::span<const Edge> edges,
             std::vector<Weight> weights)
    : Graph(num_vertices) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) +
                       " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw GraphError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  num_edges_ = static_cast<int>(edges.size());

  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != num_vertices) {
      throw GraphError("weight vector size does not match vertex count");
    }
    for (Weight w : weights) {
      if (w < 1) throw GraphError("vertex weights must be >= 1");
    }
    weights_ = std::move(weights);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges, g.weights());
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> part;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  const int n = g.num_vertices();
  IdMap ids;
  ids.to_new.assign(n, -1);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= n) {
      throw GraphError("induced_subgraph: unknown vertex " + std::to_string(v));
    }
    ids.to_new[v] = static_cast<Vertex>(ids.to_old.size());
    ids.to_old.push_back(v);
  }

  std::vector<Edge> edges;
  for (Vertex old_u : ids.to_old) {
    for (Vertex old_v : g.neighbors(old_u)) {
      if (old_u < old_v && ids.to_new[old_v] >= 0) {
        edges.push_back({ids.to_new[old_u], ids.to_new[old_v]});
      }
    }
  }
  std::vector<Weight> weights;
  if (g.has_weights()) {
    for (Vertex old_v : ids.to_old) weights.push_back(g.weight(old_v));
  }
  const int kept = static_cast<int>(ids.to_old.size());
  return {Graph(kept, edges, std::move(weights)), std::move(ids)};
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<bool> dropped(g.num_vertices(), false);
  for (Vertex v : drop) {
    if (v < 0 || v >= g.num_vertices()) {
      throw GraphError("delete_vertices: unknown vertex " + std::to_string(v));
    }
    dropped[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.num_vertices()) return false;
    in[v] = true;
  }
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

}  // namespace crownkit
