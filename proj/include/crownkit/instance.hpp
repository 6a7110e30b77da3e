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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crownkit/cnf.hpp"
#include "crownkit/graph.hpp"

namespace crownkit {

enum class Problem {
  vertex_cover,
  nk_coloring,
  maxsat,
  nk_list_coloring,
  longest_cycle_vc,
  pcoc,
  pcoc_weighted,
  cvd_clique_bound,
};

inline constexpr Problem kAllProblems[] = {
    Problem::vertex_cover,     Problem::nk_coloring,  Problem::maxsat,
    Problem::nk_list_coloring, Problem::longest_cycle_vc, Problem::pcoc,
    Problem::pcoc_weighted,    Problem::cvd_clique_bound,
};

/// Command-line tag: vc, nk-coloring, maxsat, list-coloring, longest-cycle,
/// pcoc, pcoc-weighted, cvd.
std::string_view problem_tag(Problem p);
std::optional<Problem> problem_from_tag(std::string_view tag);

struct ProblemInstance {
  Problem problem = Problem::vertex_cover;
  std::variant<Graph, CnfFormula> payload;
  int k = 0;
  std::optional<int> p;
  std::optional<int> ell;
  std::optional<std::vector<Vertex>> modulator;  // sorted
  std::optional<std::vector<std::vector<int>>> lists;  // sorted per vertex

  const Graph& graph() const { return std::get<Graph>(payload); }
  const CnfFormula& formula() const { return std::get<CnfFormula>(payload); }

  /// Throws GraphError when the optional fields do not fit the problem.
  void validate() const;

  /// Stable text form used for golden comparisons and trace replay.
  std::string canonical_text() const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

}  // namespace crownkit
