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

#include "crownkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace crownkit {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  }
  return v;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(number, line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

struct RawGraph {
  int n = -1;
  int m = 0;
  int header_line = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  std::vector<Weight> weights;
  std::vector<Vertex> side_a;
  bool has_side = false;
};

RawGraph read_raw_graph(std::string_view text, bool allow_side) {
  RawGraph raw;
  bool any_weight = false;
  for_each_line(text, [&](int ln, std::string_view line) {
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') return;
    if (tok[0] == "p") {
      if (raw.n >= 0) throw ParseError(ln, "duplicate header");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(ln, "header must be 'p edge N M'");
      }
      long long n = to_int(tok[2], ln), m = to_int(tok[3], ln);
      if (n < 0 || m < 0) throw ParseError(ln, "negative size in header");
      raw.n = static_cast<int>(n);
      raw.m = static_cast<int>(m);
      raw.header_line = ln;
      raw.weights.assign(raw.n, 1);
      return;
    }
    if (raw.n < 0) throw ParseError(ln, "line before 'p edge' header");
    auto vertex = [&](std::string_view t) {
      long long v = to_int(t, ln);
      if (v < 1 || v > raw.n) {
        throw ParseError(ln, "endpoint out of range: " + std::string(t));
      }
      return static_cast<Vertex>(v - 1);
    };
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(ln, "edge line must be 'e U V'");
      Vertex u = vertex(tok[1]), v = vertex(tok[2]);
      if (u == v) throw ParseError(ln, "self-loop");
      raw.edges.push_back({std::min(u, v), std::max(u, v)});
      raw.edge_lines.push_back(ln);
    } else if (tok[0] == "w") {
      if (tok.size() != 3) throw ParseError(ln, "weight line must be 'w V X'");
      Vertex v = vertex(tok[1]);
      long long w = to_int(tok[2], ln);
      if (w < 1) throw ParseError(ln, "weight must be >= 1");
      raw.weights[v] = w;
      any_weight = true;
    } else if (tok[0] == "a" && allow_side) {
      if (raw.has_side) throw ParseError(ln, "duplicate side line");
      raw.has_side = true;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        raw.side_a.push_back(vertex(tok[i]));
      }
    } else {
      throw ParseError(ln, "unknown line type '" + std::string(tok[0]) + "'");
    }
  });
  if (raw.n < 0) throw ParseError(1, "missing 'p edge' header");

  std::vector<std::size_t> order(raw.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return raw.edges[x] < raw.edges[y];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (raw.edges[order[i]] == raw.edges[order[i - 1]]) {
      throw ParseError(raw.edge_lines[order[i]], "duplicate edge");
    }
  }
  if (static_cast<int>(raw.edges.size()) != raw.m) {
    throw ParseError(raw.header_line, "header declares " + std::to_string(raw.m) +
                                          " edges, found " +
                                          std::to_string(raw.edges.size()));
  }
  if (!any_weight) raw.weights.clear();
  return raw;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  RawGraph raw = read_raw_graph(text, false);
  return Graph(raw.n, raw.edges, std::move(raw.weights));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  if (g.has_weights()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
    }
  }
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

BipartiteInput parse_bipartite(std::string_view text) {
  RawGraph raw = read_raw_graph(text, true);
  if (!raw.has_side) throw ParseError(1, "missing 'a' side line");
  std::vector<bool> in_a(raw.n, false);
  for (Vertex v : raw.side_a) in_a[v] = true;

  BipartiteInput in;
  std::vector<int> index(raw.n);
  for (Vertex v = 0; v < raw.n; ++v) {
    auto& side = in_a[v] ? in.a_to_file : in.b_to_file;
    index[v] = static_cast<int>(side.size());
    side.push_back(v);
    Weight w = raw.weights.empty() ? 1 : raw.weights[v];
    (in_a[v] ? in.weight_a : in.weight_b).push_back(w);
  }
  std::vector<BipartiteEdge> edges;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const Edge& e = raw.edges[i];
    if (in_a[e.u] == in_a[e.v]) {
      throw ParseError(raw.edge_lines[i], "edge does not cross the sides");
    }
    Vertex a = in_a[e.u] ? e.u : e.v, b = in_a[e.u] ? e.v : e.u;
    edges.push_back({index[a], index[b]});
  }
  in.graph = BipartiteGraph(static_cast<int>(in.a_to_file.size()),
                            static_cast<int>(in.b_to_file.size()), edges);
  return in;
}

CnfFormula parse_cnf(std::string_view text) {
  int n = -1, m = 0, header_line = 0;
  std::vector<Clause> clauses;
  Clause current;
  int clause_line = 0;
  for_each_line(text, [&](int ln, std::string_view line) {
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#' || tok[0] == "%") return;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(ln, "duplicate header");
      if (tok.size() != 4 || tok[1] != "cnf") {
        throw ParseError(ln, "header must be 'p cnf N M'");
      }
      n = static_cast<int>(to_int(tok[2], ln));
      m = static_cast<int>(to_int(tok[3], ln));
      if (n < 0 || m < 0) throw ParseError(ln, "negative size in header");
      header_line = ln;
      return;
    }
    if (n < 0) throw ParseError(ln, "line before 'p cnf' header");
    for (auto t : tok) {
      long long lit = to_int(t, ln);
      if (current.empty()) clause_line = ln;
      if (lit == 0) {
        if (current.empty()) throw ParseError(ln, "empty clause");
        Clause sorted = current;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
          if (sorted[i] == -sorted[i - 1] && sorted[i] != 0) {
            throw ParseError(ln, "clause contains x and -x");
          }
        }
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit < -n || lit > n) {
        throw ParseError(ln, "literal out of range: " + std::string(t));
      }
      current.push_back(static_cast<Literal>(lit));
    }
  });
  if (n < 0) throw ParseError(1, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(clause_line, "clause not terminated by 0");
  if (static_cast<int>(clauses.size()) != m) {
    throw ParseError(header_line, "header declares " + std::to_string(m) +
                                      " clauses, found " +
                                      std::to_string(clauses.size()));
  }
  try {
    return CnfFormula(n, std::move(clauses));
  } catch (const GraphError& e) {
    throw ParseError(header_line, e.what());
  }
}

std::string serialize_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Literal lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::vector<Vertex> parse_modulator(std::string_view text) {
  std::vector<Vertex> out;
  for_each_line(text, [&](int ln, std::string_view line) {
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') return;
    std::size_t first = tok[0] == "s" ? 1 : 0;
    for (std::size_t i = first; i < tok.size(); ++i) {
      long long v = to_int(tok[i], ln);
      if (v < 1) throw ParseError(ln, "vertex ids are 1-based");
      out.push_back(static_cast<Vertex>(v - 1));
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string serialize_modulator(const std::vector<Vertex>& s) {
  std::ostringstream out;
  out << 's';
  for (Vertex v : s) out << ' ' << v + 1;
  out << '\n';
  return out.str();
}

std::vector<std::vector<int>> parse_lists(std::string_view text,
                                          int num_vertices) {
  std::vector<std::vector<int>> lists(num_vertices);
  std::vector<bool> seen(num_vertices, false);
  for_each_line(text, [&](int ln, std::string_view line) {
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') return;
    if (tok[0] != "l" || tok.size() < 2) {
      throw ParseError(ln, "list line must be 'l V C1 C2 ...'");
    }
    long long v = to_int(tok[1], ln);
    if (v < 1 || v > num_vertices) throw ParseError(ln, "vertex out of range");
    if (seen[v - 1]) throw ParseError(ln, "duplicate list for vertex");
    seen[v - 1] = true;
    auto& list = lists[v - 1];
    for (std::size_t i = 2; i < tok.size(); ++i) {
      long long c = to_int(tok[i], ln);
      if (c < 0) throw ParseError(ln, "colors must be non-negative");
      list.push_back(static_cast<int>(c));
    }
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw ParseError(ln, "duplicate color in list");
    }
  });
  return lists;
}

std::string serialize_lists(const std::vector<std::vector<int>>& lists) {
  std::ostringstream out;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    out << "l " << v + 1;
    for (int c : lists[v]) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace crownkit
