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

// Certificate checkers. They read only adjacency and weights from the host
// and never call back into the constructors.

#include <algorithm>
#include <numeric>

#include "crownkit/expansion.hpp"
#include "crownkit/matching.hpp"

namespace crownkit {

namespace {

// Sorted, duplicate free, inside [0, n). Returns membership flags.
bool as_flags(const std::vector<int>& set, int n, std::vector<bool>& flags) {
  flags.assign(n, false);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 0 || set[i] >= n) return false;
    if (i > 0 && set[i] <= set[i - 1]) return false;
    flags[set[i]] = true;
  }
  return true;
}

bool neighbourhood_inside(const BipartiteGraph& g, const std::vector<int>& bs,
                          const std::vector<bool>& allowed_a) {
  for (int b : bs) {
    for (int a : g.neighbors_of_b(b)) {
      if (!allowed_a[a]) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_certificate(const BipartiteGraph& g,
                        const ExpansionCertificate& cert) {
  std::vector<bool> in_x, in_y;
  if (cert.q < 1 || cert.x.empty() || cert.y.empty()) return false;
  if (!as_flags(cert.x, g.size_a(), in_x) || !as_flags(cert.y, g.size_b(), in_y)) {
    return false;
  }
  std::vector<int> deg_a(g.size_a(), 0), deg_b(g.size_b(), 0);
  for (const auto& e : cert.m) {
    if (e.a < 0 || e.a >= g.size_a() || e.b < 0 || e.b >= g.size_b()) {
      return false;
    }
    if (!in_x[e.a] || !in_y[e.b] || !g.adjacent(e.a, e.b)) return false;
    if (++deg_b[e.b] > 1) return false;
    ++deg_a[e.a];
  }
  for (int a : cert.x) {
    if (deg_a[a] != cert.q) return false;
  }
  return neighbourhood_inside(g, cert.y, in_x);
}

bool verify_certificate(const WeightedBipartiteGraph& wg,
                        const WeightedExpansionCertificate& cert) {
  const BipartiteGraph& g = wg.base();
  std::vector<bool> in_x, in_y;
  if (cert.q < 1 || cert.x.empty() || cert.y.empty()) return false;
  if (!as_flags(cert.x, g.size_a(), in_x) || !as_flags(cert.y, g.size_b(), in_y)) {
    return false;
  }
  Weight w_max = 0;
  for (Weight w : wg.weights_b()) w_max = std::max(w_max, w);
  if (cert.w_cap != w_max) return false;
  if (static_cast<int>(cert.f.size()) != g.size_b()) return false;

  std::vector<Weight> load(g.size_a(), 0);
  for (int b = 0; b < g.size_b(); ++b) {
    int a = cert.f[b];
    if (!in_y[b]) {
      if (a != kUnmatched) return false;
      continue;
    }
    if (a < 0 || a >= g.size_a() || !in_x[a] || !g.adjacent(a, b)) {
      return false;
    }
    load[a] += wg.weight_b(b);
  }
  for (int a : cert.x) {
    if (load[a] < cert.q - w_max + 1) return false;
  }
  return neighbourhood_inside(g, cert.y, in_x);
}

bool verify_certificate(const BipartiteGraph& g,
                        const StrongerExpansionCertificate& cert) {
  std::vector<bool> in_a, in_b;
  if (cert.q < 1) return false;
  if (!as_flags(cert.a_hat, g.size_a(), in_a) ||
      !as_flags(cert.b_hat, g.size_b(), in_b)) {
    return false;
  }
  if (cert.b_hat.empty() && !cert.a_hat.empty()) return false;
  if (!neighbourhood_inside(g, cert.b_hat, in_a)) return false;
  long long outside_b = g.size_b() - static_cast<long long>(cert.b_hat.size());
  long long outside_a = g.size_a() - static_cast<long long>(cert.a_hat.size());
  if (outside_b > cert.q * outside_a) return false;

  auto sub = g.induced(cert.a_hat, cert.b_hat);
  std::vector<int> caps(sub.graph.size_a(), cert.q);
  if (capacitated_assignment(sub.graph, caps).total !=
      cert.q * sub.graph.size_a()) {
    return false;
  }
  const int na = sub.graph.size_a();
  if (na <= 7) {
    for (unsigned mask = 1; mask < (1u << na); ++mask) {
      std::vector<bool> seen(sub.graph.size_b(), false);
      int hood = 0;
      for (int a = 0; a < na; ++a) {
        if (!(mask >> a & 1u)) continue;
        for (int b : sub.graph.neighbors_of_a(a)) {
          if (!seen[b]) {
            seen[b] = true;
            ++hood;
          }
        }
      }
      if (hood < cert.q * __builtin_popcount(mask)) return false;
    }
  }
  return true;
}

bool verify_certificate(const BipartiteGraph& g,
                        const AdditiveExpansionCertificate& cert) {
  std::vector<bool> in_a, in_b;
  if (cert.q < 1 || cert.a_hat.empty() || cert.b_hat.empty()) return false;
  if (!as_flags(cert.a_hat, g.size_a(), in_a) ||
      !as_flags(cert.b_hat, g.size_b(), in_b)) {
    return false;
  }
  if (!neighbourhood_inside(g, cert.b_hat, in_a)) return false;
  return has_surplus_q(g.induced(cert.a_hat, cert.b_hat).graph, cert.q);
}

bool verify_certificate(const WeightedBipartiteGraph& wg,
                        const BalancedExpansionResult& cert) {
  const BipartiteGraph& g = wg.base();
  std::vector<bool> in_a1, in_a2;
  if (cert.q < 0) return false;
  if (!as_flags(cert.a1, g.size_a(), in_a1) ||
      !as_flags(cert.a2, g.size_a(), in_a2)) {
    return false;
  }
  for (int a = 0; a < g.size_a(); ++a) {
    if (in_a1[a] == in_a2[a]) return false;
  }
  if (static_cast<int>(cert.f.size()) != g.size_b()) return false;

  Weight w_max = 1;
  for (Weight w : wg.weights_b()) w_max = std::max(w_max, w);
  std::vector<Weight> load(wg.weights_a());
  std::vector<int> feeds_a1;
  for (int b = 0; b < g.size_b(); ++b) {
    int a = cert.f[b];
    if (a < 0 || a >= g.size_a() || !g.adjacent(a, b)) return false;
    load[a] += wg.weight_b(b);
    if (in_a1[a]) feeds_a1.push_back(b);
  }
  for (int a = 0; a < g.size_a(); ++a) {
    if (in_a1[a] && load[a] < cert.q - w_max + 1) return false;
    if (in_a2[a] && load[a] > cert.q + w_max - 1) return false;
  }
  return neighbourhood_inside(g, feeds_a1, in_a1);
}

}  // namespace crownkit
