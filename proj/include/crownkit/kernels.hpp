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

#include <array>
#include <vector>

#include "crownkit/cnf.hpp"
#include "crownkit/graph.hpp"
#include "crownkit/instance.hpp"
#include "crownkit/trace.hpp"

namespace crownkit {

// Every kernelizer runs its rules to a fixpoint, re-testing from the first
// rule after each application. A reduced outcome carries the instance that
// replay(original, trace) rebuilds.

/// Reduced instances have at most 3k' vertices.
KernelOutcome kernelize_vertex_cover(const Graph& g, int k);

/// Can g be properly colored with n - k colors? Reduced: at most 3k' vertices.
KernelOutcome kernelize_nk_coloring(const Graph& g, int k);

/// Can at least k clauses be satisfied? Reduced: n' < k' and m' < 2k'.
KernelOutcome kernelize_maxsat(const CnfFormula& f, int k);

/// Lists must all have n - k colors. Reduced: at most n' distinct colors.
/// Vertices removed by the rule are recorded as precolored in the trace.
KernelOutcome reduce_list_coloring_colors(
    const Graph& g, int k, const std::vector<std::vector<int>>& lists);

/// Cycle on exactly ell vertices, s a vertex cover with |s| = k. Reduced:
/// at most k + k(k-1)/2 vertices, or k + k(k-1) when ell = 4.
KernelOutcome reduce_longest_cycle_vc(const Graph& g, int k, int ell,
                                      const std::vector<Vertex>& s);

/// Delete at most k vertices so every component has at most p vertices.
/// Reduced: fewer than p|X| components outside the packing X, |X| <= (p+1)k'.
KernelOutcome kernelize_pcoc(const Graph& g, int k, int p);

/// Same problem, reduced with component weight below (2p-1)|X|.
KernelOutcome kernelize_pcoc_weighted(const Graph& g, int k, int p);

/// Cluster vertex deletion. Reduced: fewer than 2|S| cliques outside the
/// P3 packing S.
KernelOutcome bound_cvd_cliques(const Graph& g, int k);

/// Dispatch on instance.problem.
KernelOutcome kernelize(const ProblemInstance& instance);

/// Vertex-disjoint connected sets of p+1 vertices, grown by BFS from the
/// smallest free vertex. Maximal: every component of the rest has <= p.
std::vector<std::vector<Vertex>> greedy_connected_packing(const Graph& g, int p);

/// Vertex-disjoint induced P3s found by scanning triples u < v < w.
/// Maximal: the rest is a cluster graph.
std::vector<std::array<Vertex, 3>> greedy_p3_packing(const Graph& g);

/// Components of g - modulator, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components_outside(
    const Graph& g, const std::vector<Vertex>& modulator);

}  // namespace crownkit
