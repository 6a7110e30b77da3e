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
#include <vector>

#include "crownkit/cnf.hpp"
#include "crownkit/graph.hpp"
#include "crownkit/instance.hpp"

namespace crownkit {

/// Instance is too large for exhaustive search.
class OracleGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Brute-force ground truth. Nothing here depends on the kernel or lemma code.

int exact_vertex_cover(const Graph& g);             // n <= 20
int exact_chromatic_number(const Graph& g);         // n <= 10, empty graph -> 0
int exact_maxsat(const CnfFormula& f);              // vars <= 16
int exact_pcoc(const Graph& g, int p);              // n <= 14
int exact_cvd(const Graph& g);                      // n <= 14
bool has_cycle_of_length(const Graph& g, int ell);  // n <= 12
bool exact_list_coloring(const Graph& g,            // n <= 8
                         const std::vector<std::vector<int>>& lists);

/// Yes/no answer of the decision problem the instance encodes.
bool oracle_answer(const ProblemInstance& instance);

}  // namespace crownkit
