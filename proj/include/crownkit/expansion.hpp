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

#include "crownkit/bipartite.hpp"
#include "crownkit/crown.hpp"

namespace crownkit {

/// Every a in x owns exactly q private edges of m into y, and N(y) lies in x.
struct ExpansionCertificate {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<BipartiteEdge> m;
  int q = 0;
  friend bool operator==(const ExpansionCertificate&,
                         const ExpansionCertificate&) = default;
};

/// f[b] is the head of b for b in y and kUnmatched elsewhere. Each head
/// receives weight at least q - w_cap + 1.
struct WeightedExpansionCertificate {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> f;
  int q = 0;
  Weight w_cap = 0;
  friend bool operator==(const WeightedExpansionCertificate&,
                         const WeightedExpansionCertificate&) = default;
};

struct StrongerExpansionCertificate {
  std::vector<int> a_hat;
  std::vector<int> b_hat;
  int q = 0;
  friend bool operator==(const StrongerExpansionCertificate&,
                         const StrongerExpansionCertificate&) = default;
};

struct AdditiveExpansionCertificate {
  std::vector<int> a_hat;
  std::vector<int> b_hat;
  int q = 0;
  friend bool operator==(const AdditiveExpansionCertificate&,
                         const AdditiveExpansionCertificate&) = default;
};

/// f is total on B. Loads are w(a) + w(f^-1(a)).
struct BalancedExpansionResult {
  std::vector<int> a1;
  std::vector<int> a2;
  std::vector<int> f;
  Weight q = 0;
  friend bool operator==(const BalancedExpansionResult&,
                         const BalancedExpansionResult&) = default;
};

/// Requires q >= 1, |B| >= q|A| and no isolated B vertex.
ExpansionCertificate expansion_lemma(const BipartiteGraph& g, int q);

/// Requires q >= 1, w(B) >= q|A| and no isolated B vertex. A weights are
/// ignored.
WeightedExpansionCertificate weighted_expansion_lemma(
    const WeightedBipartiteGraph& g, int q);

/// No size precondition. Result may be empty.
StrongerExpansionCertificate stronger_expansion_lemma(const BipartiteGraph& g,
                                                      int q);

/// Requires q >= 1, |B| > q|A| and no isolated B vertex.
AdditiveExpansionCertificate additive_expansion_lemma(const BipartiteGraph& g,
                                                      int q);

/// Requires q >= w_b_max, no isolated B vertex and a non-empty graph.
/// Load bounds use W = max(1, w_b_max).
BalancedExpansionResult balanced_expansion(const WeightedBipartiteGraph& g,
                                           Weight q);

/// The q = 1 expansion read as a crown of g.as_graph(): crown y, head x.
CrownDecomposition expansion_as_crown(const BipartiteGraph& g,
                                      const ExpansionCertificate& cert);

bool verify_certificate(const BipartiteGraph& g,
                        const ExpansionCertificate& cert);
bool verify_certificate(const WeightedBipartiteGraph& g,
                        const WeightedExpansionCertificate& cert);
bool verify_certificate(const BipartiteGraph& g,
                        const StrongerExpansionCertificate& cert);
bool verify_certificate(const BipartiteGraph& g,
                        const AdditiveExpansionCertificate& cert);
bool verify_certificate(const WeightedBipartiteGraph& g,
                        const BalancedExpansionResult& cert);

}  // namespace crownkit
