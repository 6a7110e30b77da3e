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

#include "crownkit/instance.hpp"

#include <algorithm>
#include <sstream>

#include "crownkit/io.hpp"

namespace crownkit {

namespace {

constexpr std::pair<Problem, std::string_view> kTags[] = {
    {Problem::vertex_cover, "vc"},
    {Problem::nk_coloring, "nk-coloring"},
    {Problem::maxsat, "maxsat"},
    {Problem::nk_list_coloring, "list-coloring"},
    {Problem::longest_cycle_vc, "longest-cycle"},
    {Problem::pcoc, "pcoc"},
    {Problem::pcoc_weighted, "pcoc-weighted"},
    {Problem::cvd_clique_bound, "cvd"},
};

}  // namespace

std::string_view problem_tag(Problem p) {
  for (const auto& [prob, tag] : kTags) {
    if (prob == p) return tag;
  }
  return "?";
}

std::optional<Problem> problem_from_tag(std::string_view tag) {
  for (const auto& [prob, t] : kTags) {
    if (t == tag) return prob;
  }
  return std::nullopt;
}

void ProblemInstance::validate() const {
  const bool wants_cnf = problem == Problem::maxsat;
  if (wants_cnf != std::holds_alternative<CnfFormula>(payload)) {
    throw GraphError("payload type does not match the problem");
  }
  if (k < 0) throw GraphError("budget k must be non-negative");
  if (p && *p < 1) throw GraphError("p must be positive");
  if (ell && *ell < 1) throw GraphError("ell must be positive");

  switch (problem) {
    case Problem::pcoc:
    case Problem::pcoc_weighted:
      if (!p) throw GraphError("p-component order connectivity needs p");
      break;
    case Problem::longest_cycle_vc: {
      if (!ell) throw GraphError("longest cycle needs ell");
      if (!modulator) throw GraphError("longest cycle needs a modulator");
      const Graph& g = graph();
      for (Vertex v : *modulator) {
        if (v < 0 || v >= g.num_vertices()) {
          throw GraphError("modulator vertex out of range");
        }
      }
      if (!is_vertex_cover(g, *modulator)) {
        throw GraphError("modulator is not a vertex cover");
      }
      if (static_cast<int>(modulator->size()) != k) {
        throw GraphError("modulator size must equal k");
      }
      break;
    }
    case Problem::nk_list_coloring: {
      if (!lists) throw GraphError("list coloring needs color lists");
      const Graph& g = graph();
      if (static_cast<int>(lists->size()) != g.num_vertices()) {
        throw GraphError("one color list per vertex required");
      }
      const int want = g.num_vertices() - k;
      for (const auto& l : *lists) {
        if (static_cast<int>(l.size()) != want) {
          throw GraphError("every list must have n-k colors");
        }
      }
      break;
    }
    default:
      break;
  }
}

std::string ProblemInstance::canonical_text() const {
  std::ostringstream out;
  out << "c instance " << problem_tag(problem) << " k=" << k;
  if (p) out << " p=" << *p;
  if (ell) out << " ell=" << *ell;
  out << '\n';
  if (std::holds_alternative<CnfFormula>(payload)) {
    out << serialize_cnf(formula());
  } else {
    out << serialize_graph(graph());
  }
  if (modulator) out << serialize_modulator(*modulator);
  if (lists) out << serialize_lists(*lists);
  return out.str();
}

}  // namespace crownkit
