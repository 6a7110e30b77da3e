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

#include <vector>

#include "crownkit/graph.hpp"

namespace crownkit {

/// Literal: +v or -v for variable v in [1, num_vars].
using Literal = int;
using Clause = std::vector<Literal>;

/// CNF formula. Clauses keep their input order; inside a clause literals are
/// deduplicated and sorted by variable, negative literal first.
class CnfFormula {
 public:
  CnfFormula() = default;
  /// Throws GraphError on empty clauses, out-of-range literals or clauses
  /// that contain both x and -x.
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  int num_vars() const noexcept { return num_vars_; }
  int num_clauses() const noexcept {
    return static_cast<int>(clauses_.size());
  }
  const Clause& clause(int i) const { return clauses_[i]; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

}  // namespace crownkit
