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

#include "crownkit/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace crownkit {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars < 0) throw GraphError("negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    Clause& c = clauses_[i];
    if (c.empty()) {
      throw GraphError("empty clause at index " + std::to_string(i));
    }
    for (Literal lit : c) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw GraphError("literal out of range: " + std::to_string(lit));
      }
    }
    std::sort(c.begin(), c.end(), [](Literal x, Literal y) {
      if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
      return x < y;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (c[j] == -c[j - 1]) {
        throw GraphError("clause " + std::to_string(i) +
                         " contains a complementary pair");
      }
    }
  }
}

}  // namespace crownkit
