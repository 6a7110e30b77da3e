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

#include <cstdint>
#include <random>

#include "crownkit/bipartite.hpp"
#include "crownkit/cnf.hpp"
#include "crownkit/graph.hpp"
#include "crownkit/instance.hpp"

namespace crownkit {

// Seeded generators. Draws go through raw mt19937_64 output rather than the
// standard distributions, so a seed gives the same instance on every
// standard library.

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double probability);

Graph random_graph(Rng& rng, int n, double density);
BipartiteGraph random_bipartite(Rng& rng, int size_a, int size_b, double density);
/// Clause lengths in [1, max_len], no complementary pairs.
CnfFormula random_cnf(Rng& rng, int num_vars, int num_clauses, int max_len);

/// Hubs attached to many small components; the shape the expansion rules
/// look for. Component sizes are in [1, max_comp].
Graph random_hub_graph(Rng& rng, int hubs, int comps, int max_comp,
                       bool cliques);

/// Random instance small enough for the oracles.
ProblemInstance random_instance(Problem problem, Rng& rng);

}  // namespace crownkit
