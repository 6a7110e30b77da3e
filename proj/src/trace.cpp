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

#include "crownkit/trace.hpp"

#include <algorithm>
#include <sstream>

namespace crownkit {

ProblemInstance replay(const ProblemInstance& original,
                       const std::vector<RuleApplication>& trace) {
  ProblemInstance out = original;
  for (const RuleApplication& r : trace) out.k += r.budget_delta;

  if (std::holds_alternative<CnfFormula>(original.payload)) {
    const CnfFormula& f = original.formula();
    std::vector<bool> var_gone(f.num_vars() + 1, false);
    std::vector<bool> clause_gone(f.num_clauses(), false);
    for (const RuleApplication& r : trace) {
      for (int v : r.deleted_variables) var_gone.at(v) = true;
      for (int c : r.deleted_clauses) clause_gone.at(c) = true;
    }
    std::vector<int> renumber(f.num_vars() + 1, 0);
    int next = 0;
    for (int v = 1; v <= f.num_vars(); ++v) {
      if (!var_gone[v]) renumber[v] = ++next;
    }
    std::vector<Clause> clauses;
    for (int i = 0; i < f.num_clauses(); ++i) {
      if (clause_gone[i]) continue;
      Clause c;
      for (Literal lit : f.clause(i)) {
        int v = std::abs(lit);
        if (var_gone[v]) throw GraphError("replay: kept clause uses a deleted variable");
        c.push_back(lit > 0 ? renumber[v] : -renumber[v]);
      }
      clauses.push_back(std::move(c));
    }
    out.payload = CnfFormula(next, std::move(clauses));
    return out;
  }

  const Graph& g = original.graph();
  std::vector<Vertex> drop;
  for (const RuleApplication& r : trace) {
    drop.insert(drop.end(), r.deleted_vertices.begin(), r.deleted_vertices.end());
  }
  InducedSubgraph sub = delete_vertices(g, drop);
  out.payload = sub.graph;
  if (original.modulator) {
    std::vector<Vertex> s;
    for (Vertex v : *original.modulator) {
      if (sub.ids.to_new[v] >= 0) s.push_back(sub.ids.to_new[v]);
    }
    out.modulator = std::move(s);
  }
  if (original.lists) {
    std::vector<std::vector<int>> lists;
    for (Vertex old : sub.ids.to_old) lists.push_back((*original.lists)[old]);
    out.lists = std::move(lists);
  }
  return out;
}

namespace {

template <typename T, typename Fn>
void join(std::ostringstream& out, const std::vector<T>& xs, Fn fmt) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    fmt(xs[i]);
  }
}

}  // namespace

std::string serialize_trace(const std::vector<RuleApplication>& trace) {
  std::ostringstream out;
  for (const RuleApplication& r : trace) {
    out << "rule=" << r.rule << " budget_delta=" << r.budget_delta;
    out << " vertices=";
    join(out, r.deleted_vertices, [&](Vertex v) { out << v + 1; });
    out << " clauses=";
    join(out, r.deleted_clauses, [&](int c) { out << c + 1; });
    out << " variables=";
    join(out, r.deleted_variables, [&](int v) { out << v; });
    out << " precolored=";
    join(out, r.precolored, [&](const std::pair<Vertex, int>& pc) {
      out << pc.first + 1 << ':' << pc.second;
    });
    out << " certificate=" << (r.certificate.empty() ? "-" : r.certificate) << '\n';
  }
  return out.str();
}

}  // namespace crownkit
