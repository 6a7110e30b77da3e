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

#include "crownkit/bipartite.hpp"

#include <algorithm>
#include <string>

namespace crownkit {

BipartiteGraph::BipartiteGraph(int size_a, int size_b,
                               std::span<const BipartiteEdge> edges) {
  if (size_a < 0 || size_b < 0) throw GraphError("negative side size");
  adj_a_.resize(size_a);
  adj_b_.resize(size_b);
  for (const auto& e : edges) {
    if (e.a < 0 || e.a >= size_a || e.b < 0 || e.b >= size_b) {
      throw GraphError("bipartite edge out of range: " + std::to_string(e.a) +
                       " " + std::to_string(e.b));
    }
    adj_a_[e.a].push_back(e.b);
    adj_b_[e.b].push_back(e.a);
  }
  for (auto& adj : adj_a_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw GraphError("duplicate bipartite edge");
    }
  }
  for (auto& adj : adj_b_) std::sort(adj.begin(), adj.end());
  num_edges_ = static_cast<int>(edges.size());
}

bool BipartiteGraph::adjacent(int a, int b) const {
  const auto& adj = adj_a_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<BipartiteEdge> BipartiteGraph::edges() const {
  std::vector<BipartiteEdge> out;
  out.reserve(num_edges_);
  for (int a = 0; a < size_a(); ++a) {
    for (int b : adj_a_[a]) out.push_back({a, b});
  }
  return out;
}

BipartiteGraph::Induced BipartiteGraph::induced(
    std::span<const int> keep_a, std::span<const int> keep_b) const {
  Induced out;
  out.a_to_old.assign(keep_a.begin(), keep_a.end());
  out.b_to_old.assign(keep_b.begin(), keep_b.end());
  std::sort(out.a_to_old.begin(), out.a_to_old.end());
  std::sort(out.b_to_old.begin(), out.b_to_old.end());
  out.a_to_old.erase(std::unique(out.a_to_old.begin(), out.a_to_old.end()),
                     out.a_to_old.end());
  out.b_to_old.erase(std::unique(out.b_to_old.begin(), out.b_to_old.end()),
                     out.b_to_old.end());

  std::vector<int> b_new(size_b(), -1);
  for (int i = 0; i < static_cast<int>(out.b_to_old.size()); ++i) {
    int b = out.b_to_old[i];
    if (b < 0 || b >= size_b()) throw GraphError("induced: unknown B vertex");
    b_new[b] = i;
  }
  std::vector<BipartiteEdge> edges;
  for (int i = 0; i < static_cast<int>(out.a_to_old.size()); ++i) {
    int a = out.a_to_old[i];
    if (a < 0 || a >= size_a()) throw GraphError("induced: unknown A vertex");
    for (int b : adj_a_[a]) {
      if (b_new[b] >= 0) edges.push_back({i, b_new[b]});
    }
  }
  out.graph = BipartiteGraph(static_cast<int>(out.a_to_old.size()),
                             static_cast<int>(out.b_to_old.size()), edges);
  return out;
}

Graph BipartiteGraph::as_graph() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (int a = 0; a < size_a(); ++a) {
    for (int b : adj_a_[a]) edges.push_back({a_vertex(a), b_vertex(b)});
  }
  return Graph(size_a() + size_b(), edges);
}

WeightedBipartiteGraph::WeightedBipartiteGraph(BipartiteGraph base,
                                               std::vector<Weight> weight_a,
                                               std::vector<Weight> weight_b)
    : base_(std::move(base)),
      weight_a_(std::move(weight_a)),
      weight_b_(std::move(weight_b)) {
  if (static_cast<int>(weight_a_.size()) != base_.size_a() ||
      static_cast<int>(weight_b_.size()) != base_.size_b()) {
    throw GraphError("weight vectors do not match side sizes");
  }
  for (Weight w : weight_a_) {
    if (w < 1) throw GraphError("weights must be >= 1");
  }
  for (Weight w : weight_b_) {
    if (w < 1) throw GraphError("weights must be >= 1");
    w_b_max_ = std::max(w_b_max_, w);
  }
}

WeightedBipartiteGraph::WeightedBipartiteGraph(BipartiteGraph base)
    : WeightedBipartiteGraph(base, std::vector<Weight>(base.size_a(), 1),
                             std::vector<Weight>(base.size_b(), 1)) {}

}  // namespace crownkit
