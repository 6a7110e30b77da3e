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

// Exhaustive reference checks used only by the tests. Written against the
// definitions, independent of the library algorithms.

#include <vector>

#include "crownkit/bipartite.hpp"
#include "crownkit/graph.hpp"

namespace brute {

using crownkit::BipartiteGraph;
using crownkit::Graph;
using crownkit::Weight;
using crownkit::WeightedBipartiteGraph;

int max_matching_size(const BipartiteGraph& g);
/// Smallest vertex set touching every edge, over all subsets (|A|+|B| <= 16).
int min_bipartite_cover(const BipartiteGraph& g);
/// Some X subset of A with |N(X)| < |X|.
bool has_hall_violator(const BipartiteGraph& g);
/// x violates Hall and no proper non-empty subset does.
bool is_minimal_violator(const BipartiteGraph& g, const std::vector<int>& x);
/// Largest assignment of B vertices to neighbours with per-A capacities.
int capacitated_total(const BipartiteGraph& g, const std::vector<int>& caps);
/// |N(X)| >= |X| + q for every non-empty X.
bool surplus_by_subsets(const BipartiteGraph& g, int q);
/// A saturating matching survives the removal of every q-subset of B.
bool surplus_by_deletion(const BipartiteGraph& g, int q);
/// For all X subset of A (given as sorted list), |N(X) ∩ B̂| >= q|X|.
bool ratio_expansion_by_subsets(const BipartiteGraph& g, const std::vector<int>& a_hat,
                                const std::vector<int>& b_hat, int q);
/// A weighted q-expansion (X, Y, f) exists (|A| <= 5, |B| <= 7).
bool weighted_expansion_exists(const WeightedBipartiteGraph& g, int q);
/// A balanced expansion (A1, A2, f) exists, W = max(1, w_b_max).
bool balanced_expansion_exists(const WeightedBipartiteGraph& g, Weight q);

/// Component labels by union-find; parts sorted, ordered by minimum.
std::vector<std::vector<int>> union_find_components(const Graph& g);
/// Chromatic number through a DP over independent sets.
int chromatic_by_subsets(const Graph& g);

}  // namespace brute
