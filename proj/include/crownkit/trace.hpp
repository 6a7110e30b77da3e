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
#include <utility>
#include <vector>

#include "crownkit/instance.hpp"

namespace crownkit {

/// One fired reduction rule. All ids refer to the original instance.
struct RuleApplication {
  std::string rule;
  std::string certificate;  // compact, space free; empty when none
  std::vector<Vertex> deleted_vertices;
  std::vector<int> deleted_clauses;
  std::vector<int> deleted_variables;  // 1-based variable numbers
  std::vector<std::pair<Vertex, int>> precolored;  // (vertex, color)
  int budget_delta = 0;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct KernelOutcome {
  std::optional<bool> decided;
  std::optional<ProblemInstance> reduced;
  std::vector<RuleApplication> trace;
  /// Original ids of the surviving vertices (graph problems) or variables
  /// (Max-SAT, 1-based). Empty when decided.
  std::vector<int> surviving;
};

/// Applies the deletions and budget changes of `trace` to `original`.
/// Kernels must produce exactly this instance when they do not decide.
ProblemInstance replay(const ProblemInstance& original,
                       const std::vector<RuleApplication>& trace);

/// One "key=value ..." line per rule, ids 1-based.
std::string serialize_trace(const std::vector<RuleApplication>& trace);

}  // namespace crownkit
