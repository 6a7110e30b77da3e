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

#include <optional>
#include <span>
#include <vector>

#include "crownkit/bipartite.hpp"

namespace crownkit {

inline constexpr int kUnmatched = -1;

struct Matching {
  std::vector<int> mate_a;  // B partner of each A vertex, or kUnmatched
  std::vector<int> mate_b;  // A partner of each B vertex, or kUnmatched

  int size() const;
  /// Sorted by a.
  std::vector<BipartiteEdge> edges() const;
  bool saturates_a() const;
};

/// Maximum cardinality matching (Hopcroft-Karp). Deterministic: the search
/// visits vertices and adjacency lists in ascending id order.
Matching max_matching(const BipartiteGraph& g);

/// A matching is valid for g when it is symmetric and uses only edges of g.
bool is_matching(const BipartiteGraph& g, const Matching& m);

struct HallViolator {
  std::vector<int> x;             // sorted A vertices
  std::vector<int> neighborhood;  // N(x), sorted
};

/// Absent iff a matching saturating A exists. Otherwise the violator is the
/// alternating-reach set of the smallest unsaturated A vertex under a
/// maximum matching; such a set has |N(x)| = |x| - 1 and is inclusion-minimal.
std::optional<HallViolator> minimal_hall_set(const BipartiteGraph& g);

struct Reach {
  std::vector<bool> a;
  std::vector<bool> b;
};

/// Vertices reachable by alternating paths that start at the given A roots
/// and leave A along non-matching edges, B along matching edges.
Reach reach_from_a(const BipartiteGraph& g, const Matching& m,
                   std::span<const int> roots);
/// Same, rooted at every unmatched A vertex.
Reach reach_from_free_a(const BipartiteGraph& g, const Matching& m);
/// Rooted at every unmatched B vertex; leaves B along any edge and A along
/// its matching edge.
Reach reach_from_free_b(const BipartiteGraph& g, const Matching& m);

/// Copies of each vertex with the same neighbourhood; a count of zero drops
/// the vertex. Copies of one vertex are numbered consecutively.
struct Replicated {
  BipartiteGraph graph;
  std::vector<int> a_origin;
  std::vector<int> b_origin;
};
Replicated replicate(const BipartiteGraph& g, std::span<const int> a_copies,
                     std::span<const int> b_copies);

struct CapacitatedAssignment {
  std::vector<int> owner_of_b;  // A vertex that b is assigned to, or kUnmatched
  std::vector<int> load;        // number of B vertices assigned per A vertex
  int total = 0;
};

/// Maximum assignment where each b goes to at most one neighbour and each a
/// takes at most cap_a[a] vertices. Solved by splitting a into cap_a[a]
/// copies and matching.
CapacitatedAssignment capacitated_assignment(const BipartiteGraph& g,
                                             std::span<const int> cap_a);

/// True iff |N(X)| >= |X| + q for every non-empty X subset of A. Checked by
/// adding q clones of one A vertex at a time and asking for an A-saturating
/// matching.
bool has_surplus_q(const BipartiteGraph& g, int q);

}  // namespace crownkit
