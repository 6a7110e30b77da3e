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

#include "crownkit/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "crownkit/crown.hpp"
#include "crownkit/expansion.hpp"
#include "crownkit/generators.hpp"
#include "crownkit/io.hpp"
#include "crownkit/kernels.hpp"
#include "crownkit/oracles.hpp"

namespace crownkit {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KernelArgs {
  std::string problem;
  std::string input;
  std::string output;
  std::string trace;
  std::string report;
  std::string modulator;
  std::string lists;
  int k = 0;
  std::optional<int> p;
  std::optional<int> ell;
  bool kv = false;
};

struct LemmaArgs {
  std::string lemma;
  std::string input;
  std::string output;
  long long q = 1;
  int k = 0;
};

struct VerifyArgs {
  std::string problem;
  std::string input;
  std::string modulator;
  std::string lists;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> ell;
  std::optional<std::uint64_t> seed;
  int count = 1;
  bool tamper = false;
};

Problem parse_problem(const std::string& tag) {
  auto p = problem_from_tag(tag);
  if (!p) throw InputError("unknown problem '" + tag + "'");
  return *p;
}

ProblemInstance load_instance(Problem problem, const std::string& input, int k,
                              std::optional<int> p, std::optional<int> ell,
                              const std::string& modulator,
                              const std::string& lists) {
  ProblemInstance inst;
  inst.problem = problem;
  inst.k = k;
  inst.p = p;
  inst.ell = ell;
  const std::string text = read_file(input);
  if (problem == Problem::maxsat) {
    inst.payload = parse_cnf(text);
  } else {
    inst.payload = parse_graph(text);
  }
  if (!modulator.empty()) inst.modulator = parse_modulator(read_file(modulator));
  if (!lists.empty()) {
    inst.lists = parse_lists(read_file(lists), inst.graph().num_vertices());
  }
  inst.validate();
  return inst;
}

std::string payload_text(const ProblemInstance& inst) {
  return std::holds_alternative<CnfFormula>(inst.payload)
             ? serialize_cnf(inst.formula())
             : serialize_graph(inst.graph());
}

void size_fields(std::map<std::string, std::string>& kv, const std::string& prefix,
                 const ProblemInstance& inst) {
  if (std::holds_alternative<CnfFormula>(inst.payload)) {
    kv[prefix + "n"] = std::to_string(inst.formula().num_vars());
    kv[prefix + "m"] = std::to_string(inst.formula().num_clauses());
  } else {
    kv[prefix + "n"] = std::to_string(inst.graph().num_vertices());
    kv[prefix + "m"] = std::to_string(inst.graph().num_edges());
  }
  kv[prefix + "k"] = std::to_string(inst.k);
  if (inst.p) kv[prefix + "p"] = std::to_string(*inst.p);
  if (inst.ell) kv[prefix + "ell"] = std::to_string(*inst.ell);
}

// Modulator and component statistics of a reduced p-COC or CVD instance.
void structure_fields(std::map<std::string, std::string>& kv,
                      const ProblemInstance& inst) {
  std::vector<Vertex> x;
  if (inst.problem == Problem::pcoc || inst.problem == Problem::pcoc_weighted) {
    for (const auto& s : greedy_connected_packing(inst.graph(), *inst.p)) {
      x.insert(x.end(), s.begin(), s.end());
    }
  } else if (inst.problem == Problem::cvd_clique_bound) {
    for (const auto& t : greedy_p3_packing(inst.graph())) {
      x.insert(x.end(), t.begin(), t.end());
    }
  } else {
    return;
  }
  std::sort(x.begin(), x.end());
  auto comps = components_outside(inst.graph(), x);
  kv["output_modulator"] = std::to_string(x.size());
  kv["output_components"] = std::to_string(comps.size());
  kv["output_component_weight"] =
      std::to_string(inst.graph().num_vertices() - static_cast<int>(x.size()));
}

int cmd_kernelize(const KernelArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  Problem problem = parse_problem(a.problem);
  ProblemInstance inst = load_instance(problem, a.input, a.k, a.p, a.ell,
                                       a.modulator, a.lists);
  KernelOutcome res = kernelize(inst);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  std::map<std::string, std::string> kv;
  kv["problem"] = a.problem;
  size_fields(kv, "input_", inst);
  std::map<std::string, int> fired;
  for (const auto& r : res.trace) ++fired[r.rule];
  std::string rules;
  for (const auto& [name, count] : fired) {
    rules += (rules.empty() ? "" : ",") + name + ":" + std::to_string(count);
  }
  kv["rules"] = rules.empty() ? "-" : rules;
  kv["decided"] = res.decided ? (*res.decided ? "yes" : "no") : "none";
  if (res.reduced) {
    size_fields(kv, "output_", *res.reduced);
    structure_fields(kv, *res.reduced);
  }

  const std::string trace_text = serialize_trace(res.trace);
  std::string trace_path = a.trace;
  if (trace_path.empty() && !a.output.empty()) trace_path = a.output + ".trace";
  if (!trace_path.empty()) write_file(trace_path, trace_text);

  if (res.decided) {
    out << "DECIDED " << (*res.decided ? "YES" : "NO") << '\n';
  } else if (!a.output.empty()) {
    write_file(a.output, payload_text(*res.reduced));
    if (res.reduced->modulator) {
      write_file(a.output + ".modulator", serialize_modulator(*res.reduced->modulator));
    }
    if (res.reduced->lists) {
      write_file(a.output + ".lists", serialize_lists(*res.reduced->lists));
    }
    out << "REDUCED " << a.output << '\n';
  } else {
    out << res.reduced->canonical_text();
  }

  std::ostringstream report;
  for (const auto& [key, value] : kv) report << key << '=' << value << '\n';
  if (!a.report.empty()) {
    write_file(a.report, report.str() + "time_ms=" +
                             std::to_string(elapsed.count()) + "\n");
  }
  if (a.kv) {
    out << report.str();
  } else {
    out << "input:  n=" << kv["input_n"] << " m=" << kv["input_m"]
        << " k=" << kv["input_k"] << '\n';
    if (res.reduced) {
      out << "output: n=" << kv["output_n"] << " m=" << kv["output_m"]
          << " k=" << kv["output_k"] << '\n';
    }
    out << "rules:  " << kv["rules"] << '\n';
  }
  return kExitOk;
}

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream s;
  for (std::size_t i = 0; i < ids.size(); ++i) s << (i ? "," : "") << ids[i] + 1;
  return s.str();
}

int cmd_lemma(const LemmaArgs& a, std::ostream& out) {
  std::ostringstream cert;
  cert << "lemma=" << a.lemma << '\n';
  bool ok = false;

  if (a.lemma == "crown1") {
    Graph g = parse_graph(read_file(a.input));
    auto res = crown_or_matching(g, a.k);
    cert << "k=" << a.k << '\n';
    if (auto* m = std::get_if<std::vector<Edge>>(&res)) {
      cert << "result=matching\nedges=";
      for (std::size_t i = 0; i < m->size(); ++i) {
        cert << (i ? "," : "") << (*m)[i].u + 1 << '-' << (*m)[i].v + 1;
      }
      cert << '\n';
      ok = static_cast<int>(m->size()) == a.k + 1;
    } else {
      const auto& cd = std::get<CrownDecomposition>(res);
      cert << "result=crown\ncrown=" << join_ids(cd.crown) << "\nhead="
           << join_ids(cd.head) << "\nrest=" << join_ids(cd.rest) << "\nwitness=";
      for (std::size_t i = 0; i < cd.witness.size(); ++i) {
        cert << (i ? "," : "") << cd.witness[i].u + 1 << '-' << cd.witness[i].v + 1;
      }
      cert << '\n';
      ok = verify_crown(g, cd);
    }
  } else {
    BipartiteInput in = parse_bipartite(read_file(a.input));
    const BipartiteGraph& g = in.graph;
    auto a_ids = [&](const std::vector<int>& xs) {
      std::vector<int> o;
      for (int x : xs) o.push_back(in.a_to_file[x]);
      return join_ids(o);
    };
    auto b_ids = [&](const std::vector<int>& xs) {
      std::vector<int> o;
      for (int x : xs) o.push_back(in.b_to_file[x]);
      return join_ids(o);
    };
    auto flat_id = [&](Vertex v) {
      return (v < g.size_a() ? in.a_to_file[v] : in.b_to_file[v - g.size_a()]) + 1;
    };
    WeightedBipartiteGraph wg(g, in.weight_a, in.weight_b);
    const int q = static_cast<int>(a.q);

    if (a.lemma == "crown" || a.lemma == "crown2") {
      auto res = bipartite_crown(g);
      if (auto* m = std::get_if<Matching>(&res)) {
        cert << "result=matching\nedges=";
        auto edges = m->edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
          cert << (i ? "," : "") << in.a_to_file[edges[i].a] + 1 << '-'
               << in.b_to_file[edges[i].b] + 1;
        }
        cert << '\n';
        ok = m->saturates_a() && is_matching(g, *m);
      } else {
        const auto& cd = std::get<CrownDecomposition>(res);
        auto ids = [&](const std::vector<Vertex>& vs) {
          std::ostringstream s;
          for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? "," : "") << flat_id(vs[i]);
          return s.str();
        };
        cert << "result=crown\ncrown=" << ids(cd.crown) << "\nhead=" << ids(cd.head)
             << "\nrest=" << ids(cd.rest) << "\nwitness=";
        for (std::size_t i = 0; i < cd.witness.size(); ++i) {
          cert << (i ? "," : "") << flat_id(cd.witness[i].u) << '-'
               << flat_id(cd.witness[i].v);
        }
        cert << '\n';
        ok = verify_crown(g, cd);
      }
    } else if (a.lemma == "expansion") {
      auto c = expansion_lemma(g, q);
      cert << "q=" << q << "\nx=" << a_ids(c.x) << "\ny=" << b_ids(c.y) << "\nm=";
      for (std::size_t i = 0; i < c.m.size(); ++i) {
        cert << (i ? "," : "") << in.a_to_file[c.m[i].a] + 1 << '-'
             << in.b_to_file[c.m[i].b] + 1;
      }
      cert << '\n';
      ok = verify_certificate(g, c);
    } else if (a.lemma == "weighted") {
      auto c = weighted_expansion_lemma(wg, q);
      cert << "q=" << q << "\nw_cap=" << c.w_cap << "\nx=" << a_ids(c.x)
           << "\ny=" << b_ids(c.y) << "\nf=";
      bool first = true;
      for (int b : c.y) {
        cert << (first ? "" : ",") << in.b_to_file[b] + 1 << "->"
             << in.a_to_file[c.f[b]] + 1;
        first = false;
      }
      cert << '\n';
      ok = verify_certificate(wg, c);
    } else if (a.lemma == "stronger") {
      auto c = stronger_expansion_lemma(g, q);
      cert << "q=" << q << "\nchoice=maximal-fixpoint\na_hat=" << a_ids(c.a_hat)
           << "\nb_hat=" << b_ids(c.b_hat) << '\n';
      ok = verify_certificate(g, c);
    } else if (a.lemma == "additive") {
      auto c = additive_expansion_lemma(g, q);
      cert << "q=" << q << "\na_hat=" << a_ids(c.a_hat) << "\nb_hat=" << b_ids(c.b_hat)
           << '\n';
      ok = verify_certificate(g, c);
    } else if (a.lemma == "balanced") {
      auto c = balanced_expansion(wg, a.q);
      cert << "q=" << a.q << "\na1=" << a_ids(c.a1) << "\na2=" << a_ids(c.a2) << "\nf=";
      for (int b = 0; b < g.size_b(); ++b) {
        cert << (b ? "," : "") << in.b_to_file[b] + 1 << "->" << in.a_to_file[c.f[b]] + 1;
      }
      cert << '\n';
      ok = verify_certificate(wg, c);
    } else {
      throw InputError("unknown lemma '" + a.lemma + "'");
    }
  }
  cert << "verified=" << (ok ? "true" : "false") << '\n';
  if (a.output.empty()) {
    out << cert.str();
  } else {
    write_file(a.output, cert.str());
    out << "certificate written to " << a.output << '\n';
  }
  return ok ? kExitOk : kExitDisagree;
}

// Applies a deliberate fault to a kernel result, for checking that the
// harness notices wrong kernels.
void tamper_with(KernelOutcome& res) {
  if (res.decided) {
    res.decided = !*res.decided;
    return;
  }
  ProblemInstance& r = *res.reduced;
  switch (r.problem) {
    case Problem::maxsat:
    case Problem::nk_coloring:
      r.k += 1;
      break;
    case Problem::longest_cycle_vc:
      *r.ell += 1;
      break;
    case Problem::nk_list_coloring:
      break;
    default:
      r.k -= 1;
      break;
  }
}

bool check_one(const ProblemInstance& inst, bool tamper, std::ostream& out,
               int index) {
  KernelOutcome res = kernelize(inst);
  if (tamper) tamper_with(res);
  const bool truth = oracle_answer(inst);
  bool kernel_answer;
  std::string how;
  if (res.decided) {
    kernel_answer = *res.decided;
    how = "decided";
  } else {
    kernel_answer = oracle_answer(*res.reduced);
    how = "reduced";
  }
  const bool agree = truth == kernel_answer;
  out << "instance=" << index << ' ' << (agree ? "AGREE" : "DISAGREE")
      << " oracle=" << (truth ? "yes" : "no") << ' ' << how << '='
      << (kernel_answer ? "yes" : "no") << '\n';
  return agree;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  Problem problem = parse_problem(a.problem);
  int agree = 0, disagree = 0;
  if (a.seed) {
    Rng rng(*a.seed);
    for (int i = 0; i < a.count; ++i) {
      ProblemInstance inst = random_instance(problem, rng);
      (check_one(inst, a.tamper, out, i) ? agree : disagree)++;
    }
  } else {
    if (a.input.empty()) throw InputError("verify needs --input or --seed");
    if (!a.k) throw InputError("verify --input needs --k");
    ProblemInstance inst =
        load_instance(problem, a.input, *a.k, a.p, a.ell, a.modulator, a.lists);
    (check_one(inst, a.tamper, out, 0) ? agree : disagree)++;
  }
  out << "agree=" << agree << " disagree=" << disagree << '\n';
  out << (disagree == 0 ? "AGREE" : "DISAGREE") << '\n';
  return disagree == 0 ? kExitOk : kExitDisagree;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"crownkit: crown decompositions, expansion lemmas and kernels"};
  app.require_subcommand(1);

  KernelArgs ka;
  auto* kern = app.add_subcommand("kernelize", "Reduce an instance to a kernel");
  kern->add_option("problem", ka.problem,
                   "vc, nk-coloring, maxsat, list-coloring, longest-cycle, pcoc, "
                   "pcoc-weighted or cvd")->required();
  kern->add_option("--input", ka.input, "Graph or CNF file")->required();
  kern->add_option("--k", ka.k, "Budget")->required()->check(CLI::NonNegativeNumber);
  kern->add_option("--p", ka.p, "Component size bound (pcoc)")->check(CLI::PositiveNumber);
  kern->add_option("--ell", ka.ell, "Cycle length (longest-cycle)")->check(CLI::PositiveNumber);
  kern->add_option("--modulator", ka.modulator, "Vertex cover file (longest-cycle)");
  kern->add_option("--lists", ka.lists, "Color list file (list-coloring)");
  kern->add_option("--output", ka.output, "Reduced instance file");
  kern->add_option("--trace", ka.trace, "Trace file (default: OUTPUT.trace)");
  kern->add_option("--report", ka.report, "key=value report file");
  kern->add_flag("--kv", ka.kv, "Print the report as key=value lines");

  LemmaArgs la;
  auto* lem = app.add_subcommand("lemma", "Run one lemma and print its certificate");
  lem->add_option("lemma", la.lemma,
                  "crown1, crown, expansion, weighted, stronger, additive or balanced")
      ->required();
  lem->add_option("--input", la.input, "Graph (crown1) or bipartite graph file")->required();
  lem->add_option("--q", la.q, "Expansion parameter")->check(CLI::NonNegativeNumber);
  lem->add_option("--k", la.k, "Matching bound (crown1)")->check(CLI::NonNegativeNumber);
  lem->add_option("--output", la.output, "Certificate file");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Compare kernel answers with the oracle");
  ver->add_option("problem", va.problem, "Problem tag")->required();
  ver->add_option("--input", va.input, "Instance file");
  ver->add_option("--k", va.k, "Budget")->check(CLI::NonNegativeNumber);
  ver->add_option("--p", va.p, "Component size bound")->check(CLI::PositiveNumber);
  ver->add_option("--ell", va.ell, "Cycle length")->check(CLI::PositiveNumber);
  ver->add_option("--modulator", va.modulator, "Vertex cover file");
  ver->add_option("--lists", va.lists, "Color list file");
  ver->add_option("--seed", va.seed, "Generate random instances from this seed");
  ver->add_option("--count", va.count, "Number of random instances")
      ->check(CLI::PositiveNumber);
  ver->add_flag("--tamper", va.tamper, "Corrupt kernel results on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (kern->parsed()) return cmd_kernelize(ka, out);
    if (lem->parsed()) return cmd_lemma(la, out);
    if (ver->parsed()) return cmd_verify(va, out);
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return lem->parsed() ? kExitPrecondition : kExitInputError;
  } catch (const OracleGuardError& e) {
    err << "oracle guard: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace crownkit
