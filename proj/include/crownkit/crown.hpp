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

#include <stdexcept>
#include <variant>
#include <vector>

#include "crownkit/bipartite.hpp"
#include "crownkit/graph.hpp"
#include "crownkit/matching.hpp"

namespace crownkit {

/// A lemma or kernel was called outside its stated preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partition V = crown + head + rest with a head-saturating witness matching
/// into the crown. Vertex lists are sorted; witness edges are (head, crown).
struct CrownDecomposition {
  std::vector<Vertex> crown;
  std::vector<Vertex> head;
  std::vector<Vertex> rest;
  std::vector<Edge> witness;

  friend bool operator==(const CrownDecomposition&,
                         const CrownDecomposition&) = default;
};

/// Returns k+1 pairwise disjoint edges of g, or a crown decomposition.
/// Requires no isolated vertices and at least 3k+1 vertices.
std::variant<std::vector<Edge>, CrownDecomposition> crown_or_matching(
    const Graph& g, int k);

/// Matching saturating A, or a crown with crown part in A and head in B.
/// Ids in the crown are those of g.as_graph(). Requires no isolated vertex
/// on either side and |B| >= |A|.
std::variant<Matching, CrownDecomposition> bipartite_crown(
    const BipartiteGraph& g);

/// Crown read off a maximum matching that leaves some A vertex free: the
/// alternating reach of all free A vertices. Throws PreconditionError when
/// m saturates A. Ids are those of g.as_graph().
CrownDecomposition crown_from_deficiency(const BipartiteGraph& g,
                                         const Matching& m);

bool verify_crown(const Graph& host, const CrownDecomposition& cd);
bool verify_crown(const BipartiteGraph& host, const CrownDecomposition& cd);

}  // namespace crownkit
