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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace crownkit {

using Vertex = int;
using Weight = std::int64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised when a graph, formula or instance would violate its invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with optional positive vertex
/// weights. Adjacency lists are sorted; the object is immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  /// Throws GraphError on self-loops, duplicate edges, out-of-range endpoints
  /// or non-positive weights. An empty weight vector means "all weights 1".
  Graph(int num_vertices, std::span<const Edge> edges,
        std::vector<Weight> weights = {});

  int num_vertices() const noexcept {
    return static_cast<int>(adjacency_.size());
  }
  int num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges with u < v, sorted ascending.
  std::vector<Edge> edges() const;

  bool has_weights() const noexcept { return !weights_.empty(); }
  Weight weight(Vertex v) const { return weights_.empty() ? 1 : weights_[v]; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Weight> weights_;
  int num_edges_ = 0;
};

/// Old/new vertex correspondence produced by every vertex-deleting operation.
struct IdMap {
  std::vector<Vertex> to_old;  // new id -> old id
  std::vector<Vertex> to_new;  // old id -> new id, or -1 when dropped
};

struct InducedSubgraph {
  Graph graph;
  IdMap ids;
};

Graph complement(const Graph& g);

/// Maximal connected vertex sets. Each part is sorted and parts are ordered
/// by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// G[keep]. Kept vertices are renumbered in ascending order of their old id.
/// Throws GraphError if keep names an unknown vertex.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// G - drop.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> drop);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);
bool is_independent_set(const Graph& g, std::span<const Vertex> set);

}  // namespace crownkit
