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
#include <span>
#include <vector>

#include "crownkit/graph.hpp"

namespace crownkit {

/// Edge between side-A vertex `a` and side-B vertex `b`. Both sides are
/// indexed from zero independently.
struct BipartiteEdge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const BipartiteEdge&, const BipartiteEdge&) = default;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Throws GraphError on out-of-range endpoints or duplicate edges.
  BipartiteGraph(int size_a, int size_b, std::span<const BipartiteEdge> edges);

  int size_a() const noexcept { return static_cast<int>(adj_a_.size()); }
  int size_b() const noexcept { return static_cast<int>(adj_b_.size()); }
  int num_edges() const noexcept { return num_edges_; }

  std::span<const int> neighbors_of_a(int a) const { return adj_a_[a]; }
  std::span<const int> neighbors_of_b(int b) const { return adj_b_[b]; }
  bool adjacent(int a, int b) const;

  /// Sorted by (a, b).
  std::vector<BipartiteEdge> edges() const;

  /// Sub-bipartite graph on the listed vertices, renumbered in ascending
  /// order on each side. The maps give new -> old ids.
  struct Induced;
  Induced induced(std::span<const int> keep_a, std::span<const int> keep_b) const;

  /// Flattened view: A-vertex a becomes a, B-vertex b becomes size_a() + b.
  Graph as_graph() const;
  Vertex a_vertex(int a) const noexcept { return a; }
  Vertex b_vertex(int b) const noexcept { return size_a() + b; }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<std::vector<int>> adj_a_;
  std::vector<std::vector<int>> adj_b_;
  int num_edges_ = 0;
};

struct BipartiteGraph::Induced {
  BipartiteGraph graph;
  std::vector<int> a_to_old;
  std::vector<int> b_to_old;
};

/// Bipartite graph with positive integer weights on both sides.
class WeightedBipartiteGraph {
 public:
  WeightedBipartiteGraph() = default;
  WeightedBipartiteGraph(BipartiteGraph base, std::vector<Weight> weight_a,
                         std::vector<Weight> weight_b);
  /// Unit weights everywhere.
  explicit WeightedBipartiteGraph(BipartiteGraph base);

  const BipartiteGraph& base() const noexcept { return base_; }
  Weight weight_a(int a) const { return weight_a_[a]; }
  Weight weight_b(int b) const { return weight_b_[b]; }
  const std::vector<Weight>& weights_a() const noexcept { return weight_a_; }
  const std::vector<Weight>& weights_b() const noexcept { return weight_b_; }
  /// Largest weight on side B, 0 when B is empty.
  Weight w_b_max() const noexcept { return w_b_max_; }

 private:
  BipartiteGraph base_;
  std::vector<Weight> weight_a_;
  std::vector<Weight> weight_b_;
  Weight w_b_max_ = 0;
};

}  // namespace crownkit
