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

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crownkit/bipartite.hpp"
#include "crownkit/cnf.hpp"
#include "crownkit/graph.hpp"

namespace crownkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Text formats use 1-based vertex ids; in memory they are 0-based.
//
//   graph:      p edge N M / e U V / w V X / c comment
//   bipartite:  graph format plus one "a V1 V2 ..." line naming side A
//   cnf:        p cnf N M / clauses as signed ints ending in 0
//   modulator:  whitespace separated vertex ids, '#' or 'c' comments
//   lists:      l V C1 C2 ...

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// A-side vertices keep their relative order, as do B-side vertices.
struct BipartiteInput {
  BipartiteGraph graph;
  std::vector<Weight> weight_a;
  std::vector<Weight> weight_b;
  std::vector<Vertex> a_to_file;  // 0-based file ids of A vertices
  std::vector<Vertex> b_to_file;
};
BipartiteInput parse_bipartite(std::string_view text);

CnfFormula parse_cnf(std::string_view text);
std::string serialize_cnf(const CnfFormula& f);

std::vector<Vertex> parse_modulator(std::string_view text);
std::string serialize_modulator(const std::vector<Vertex>& s);

/// Lists indexed by vertex; vertices without a line get an empty list.
std::vector<std::vector<int>> parse_lists(std::string_view text,
                                          int num_vertices);
std::string serialize_lists(const std::vector<std::vector<int>>& lists);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace crownkit
