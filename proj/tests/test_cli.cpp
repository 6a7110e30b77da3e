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

#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "crownkit/cli.hpp"
#include "crownkit/generators.hpp"
#include "crownkit/io.hpp"

using namespace crownkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "crownkit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("crownkit_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  write_file(p.string(), text);
  return p.string();
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq != std::string::npos && line.find(' ') == std::string::npos) {
      kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
  }
  return kv;
}

const char* kK24 =
    "p edge 6 8\na 1 2\n"
    "e 1 3\ne 1 4\ne 1 5\ne 1 6\ne 2 3\ne 2 4\ne 2 5\ne 2 6\n";

}  // namespace

TEST_CASE("kernelize vertex cover on a large graph") {
  Rng rng(5);
  std::string in = put("vc50.txt", serialize_graph(random_graph(rng, 50, 0.06)));
  std::string out_path = (scratch() / "vc50.out").string();
  Run r = cli({"kernelize", "vc", "--input", in, "--k", "3", "--output", out_path, "--kv"});
  REQUIRE(r.code == kExitOk);
  auto kv = key_values(r.out);
  if (kv["decided"] == "none") {
    CHECK(r.out.rfind("REDUCED ", 0) == 0);
    Graph reduced = parse_graph(read_file(out_path));
    CHECK(reduced.num_vertices() <= 9);
    CHECK(std::to_string(reduced.num_vertices()) == kv["output_n"]);
    CHECK(fs::exists(out_path + ".trace"));
  } else {
    CHECK(r.out.rfind("DECIDED ", 0) == 0);
  }
}

TEST_CASE("kernelize maxsat with many clauses decides yes") {
  std::string cnf = "p cnf 4 10\n";
  for (int i = 0; i < 10; ++i) cnf += std::to_string(i % 4 + 1) + " 0\n";
  Run r = cli({"kernelize", "maxsat", "--input", put("sat.cnf", cnf), "--k", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("DECIDED YES", 0) == 0);
}

TEST_CASE("kernelize pcoc report respects the component bound") {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_hub_graph(rng, 3, 14, 2, false);
    std::string in = put("pcoc" + std::to_string(t) + ".txt", serialize_graph(g));
    Run r = cli({"kernelize", "pcoc", "--input", in, "--k", "2", "--p", "2", "--kv"});
    REQUIRE(r.code == kExitOk);
    auto kv = key_values(r.out);
    if (kv["decided"] != "none") continue;
    int k2 = std::stoi(kv["output_k"]);
    CHECK(std::stoi(kv["output_components"]) <= 2 * 3 * k2);
  }
}

TEST_CASE("kernelize prints the instance without --output") {
  Run r = cli({"kernelize", "vc", "--input", put("tri.txt", "p edge 4 3\ne 1 2\ne 2 3\ne 1 3\n"),
               "--k", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("c instance vc k=2") != std::string::npos);
}

TEST_CASE("kernelize input errors") {
  CHECK(cli({"kernelize", "bogus", "--input", put("e.txt", "p edge 1 0\n"), "--k", "1"}).code ==
        kExitInputError);
  CHECK(cli({"kernelize", "vc", "--input", put("bad.txt", "p edge 2 1\ne 1 3\n"), "--k", "1"})
            .code == kExitInputError);
  CHECK(cli({"kernelize", "vc", "--input", (scratch() / "missing.txt").string(), "--k", "1"})
            .code == kExitInputError);
  CHECK(cli({"kernelize", "pcoc", "--input", put("e2.txt", "p edge 1 0\n"), "--k", "1"}).code ==
        kExitInputError);
  CHECK(cli({}).code == kExitInputError);
}

TEST_CASE("lemma expansion") {
  Run r = cli({"lemma", "expansion", "--input", put("k24.txt", kK24), "--q", "2"});
  REQUIRE(r.code == kExitOk);
  auto kv = key_values(r.out);
  CHECK(kv["verified"] == "true");
  CHECK(kv["x"] == "1,2");
  CHECK(kv["y"] == "3,4,5,6");

  Run small = cli({"lemma", "expansion", "--input", put("k24.txt", kK24), "--q", "3"});
  CHECK(small.code == kExitPrecondition);
  CHECK(small.err.find("q|A|") != std::string::npos);
}

TEST_CASE("lemma other certificates verify") {
  std::string in = put("k24.txt", kK24);
  for (const char* name : {"crown", "crown2", "stronger", "additive", "weighted"}) {
    Run r = cli({"lemma", name, "--input", in, "--q", "1"});
    CHECK(r.code == kExitOk);
    CHECK(key_values(r.out)["verified"] == "true");
  }
  Run bal = cli({"lemma", "balanced", "--input", in, "--q", "3"});
  CHECK(bal.code == kExitOk);
  CHECK(key_values(bal.out)["verified"] == "true");

  Run c1 = cli({"lemma", "crown1", "--input", put("star.txt", "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n"),
                "--k", "1"});
  CHECK(c1.code == kExitOk);
  CHECK(key_values(c1.out)["result"] == "crown");
}

TEST_CASE("lemma balanced rejects a small q") {
  std::string heavy = "p edge 2 1\na 1\nw 2 3\ne 1 2\n";
  Run r = cli({"lemma", "balanced", "--input", put("heavy.txt", heavy), "--q", "2"});
  CHECK(r.code == kExitPrecondition);
}

TEST_CASE("lemma writes the certificate file") {
  std::string cert = (scratch() / "cert.txt").string();
  Run r = cli({"lemma", "expansion", "--input", put("k24.txt", kK24), "--q", "2", "--output",
               cert});
  CHECK(r.code == kExitOk);
  CHECK(key_values(read_file(cert))["verified"] == "true");
}

TEST_CASE("verify agrees on random instances") {
  for (const char* tag : {"vc", "nk-coloring", "maxsat", "list-coloring", "longest-cycle",
                          "pcoc", "pcoc-weighted", "cvd"}) {
    Run r = cli({"verify", tag, "--seed", "42", "--count", "25"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("DISAGREE") == std::string::npos);
  }
}

TEST_CASE("verify on files and k = 0") {
  std::string in = put("p3.txt", "p edge 3 2\ne 1 2\ne 2 3\n");
  Run r = cli({"verify", "vc", "--input", in, "--k", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\nAGREE\n") != std::string::npos);
  Run cvd = cli({"verify", "cvd", "--input", in, "--k", "0"});
  CHECK(cvd.code == kExitOk);
  Run missing_k = cli({"verify", "vc", "--input", in});
  CHECK(missing_k.code == kExitInputError);
  Run guard = cli({"verify", "vc", "--input", put("big.txt", "p edge 30 0\n"), "--k", "1"});
  CHECK(guard.code == kExitInputError);
}

TEST_CASE("verify notices a tampered kernel") {
  for (const char* tag : {"vc", "maxsat", "pcoc", "cvd", "nk-coloring"}) {
    Run r = cli({"verify", tag, "--seed", "7", "--count", "40", "--tamper"});
    CHECK(r.code == kExitDisagree);
    CHECK(r.out.find("DISAGREE") != std::string::npos);
  }
}

TEST_CASE("kernelize output is deterministic") {
  Rng rng(13);
  std::string in = put("det.txt", serialize_graph(random_hub_graph(rng, 3, 20, 3, true)));
  std::string a = (scratch() / "det_a.out").string();
  std::string b = (scratch() / "det_b.out").string();
  Run ra = cli({"kernelize", "cvd", "--input", in, "--k", "3", "--output", a, "--kv"});
  Run rb = cli({"kernelize", "cvd", "--input", in, "--k", "3", "--output", b, "--kv"});
  CHECK(ra.code == rb.code);
  auto ka = key_values(ra.out), kb = key_values(rb.out);
  CHECK(ka == kb);
  if (fs::exists(a)) CHECK(read_file(a) == read_file(b));
  CHECK(read_file(a + ".trace") == read_file(b + ".trace"));
}
