// Copyright 2026 The hypermax Authors
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

// Test-only oracles. Nothing here calls into the code paths it checks:
// binomials come from Pascal's triangle, connectivity from enumerating edge
// deletions, crossing counts from direct subset enumeration.

#ifndef HYPERMAX_TESTS_ORACLES_HPP_
#define HYPERMAX_TESTS_ORACLES_HPP_

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "hypermax/hypergraph.hpp"

namespace hypermax::testing {

// Row-by-row Pascal triangle up to n = 160. Entries that would exceed
// INT64_MAX saturate there (exact for every n <= 66).
inline std::int64_t pascal(int n, int k) {
  static const auto table = [] {
    std::vector<std::vector<std::int64_t>> rows(161);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].assign(i + 1, 1);
      for (std::size_t j = 1; j < i; ++j) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(rows[i - 1][j - 1], rows[i - 1][j], &sum)) sum = INT64_MAX;
        rows[i][j] = sum;
      }
    }
    return rows;
  }();
  if (k < 0 || n < 0 || k > n) return 0;
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Threshold by its defining inequalities, scanning t from 1.
inline int threshold_oracle(std::int64_t k, int r) {
  for (int t = 1;; ++t) {
    if (pascal(t - 1, r - 1) <= k && k < pascal(t, r - 1)) return t;
  }
}

// Vertices reachable from s using only the edges not flagged in `deleted`.
inline bool linked(int n, const std::vector<std::vector<int>>& edges, std::uint64_t deleted, int s, int t) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(s)] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((deleted >> i) & 1U) continue;
      bool touches = false;
      for (int v : edges[i]) touches |= seen[static_cast<std::size_t>(v)] != 0;
      if (!touches) continue;
      for (int v : edges[i]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          grew = true;
        }
      }
    }
  }
  return seen[static_cast<std::size_t>(t)] != 0;
}

// Smallest edge set whose deletion disconnects s from t, by trying every
// subset of edges. Needs at most ~20 edges.
inline int separating_oracle(const Hypergraph& h, int s, int t) {
  std::vector<std::vector<int>> edges;
  for (const Edge e : h.edges()) edges.push_back(e.to_vector());
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  int best = static_cast<int>(edges.size());
  for (std::uint64_t del = 0; del < total; ++del) {
    const int size = std::popcount(del);
    if (size < best && !linked(h.num_vertices(), edges, del, s, t)) best = size;
  }
  return best;
}

// Number of edges of h crossing the side, counted edge by edge on vectors.
inline int crossing_oracle(const Hypergraph& h, const std::vector<char>& in_side) {
  int count = 0;
  for (const Edge e : h.edges()) {
    bool in = false;
    bool out = false;
    for (int v : e.to_vector()) (in_side[static_cast<std::size_t>(v)] ? in : out) = true;
    count += in && out;
  }
  return count;
}

// Random r-uniform hypergraph; each r-subset kept with probability p.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (const Edge e : Combinations(n, r)) {
    if (keep(rng)) edges.push_back(e);
  }
  return Hypergraph(n, r, std::move(edges));
}

// Strength by enumerating every vertex subset S with |S| >= 2 and every side
// X of H[S]. Exponential; meant for n <= 9.
inline int strength_oracle(const Hypergraph& h) {
  const int n = h.num_vertices();
  std::vector<std::uint64_t> masks;
  for (const Edge e : h.edges()) masks.push_back(e.mask());
  int best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) < 2) continue;
    std::vector<std::uint64_t> inside;
    for (std::uint64_t m : masks) {
      if ((m & ~s) == 0) inside.push_back(m);
    }
    int kappa = static_cast<int>(inside.size());
    for (std::uint64_t x = (s - 1) & s; x != 0; x = (x - 1) & s) {
      int cut = 0;
      for (std::uint64_t m : inside) cut += (m & x) != 0 && (m & ~x) != 0;
      if (cut < kappa) kappa = cut;
    }
    if (kappa > best) best = kappa;
  }
  return best;
}

// Maximality straight from the definition, using strength_oracle.
inline bool maximal_oracle(const Hypergraph& h, int k) {
  if (strength_oracle(h) > k) return false;
  const int n = h.num_vertices();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) != h.uniformity()) continue;
    const Edge e = VertexSet::from_mask(m);
    if (h.has_edge(e)) continue;
    if (strength_oracle(h.with_edge(e)) <= k) return false;
  }
  return true;
}

// Membership in the attachment family by full backtracking: either h is the
// complete core on t vertices, or deleting some vertex of degree k leaves a
// member on n - 1 vertices.
inline bool m_member_oracle(const Hypergraph& h, int k, int t) {
  const int n = h.num_vertices();
  const int r = h.uniformity();
  if (n == t) return static_cast<std::int64_t>(h.num_edges()) == pascal(t, r);
  if (n < t) return false;
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (const Edge e : h.edges()) deg += e.contains(v);
    if (deg != k) continue;
    std::vector<Edge> rest;
    for (const Edge e : h.edges()) {
      if (e.contains(v)) continue;
      std::uint64_t m = 0;
      for (int u : e.to_vector()) m |= std::uint64_t{1} << (u < v ? u : u - 1);
      rest.push_back(VertexSet::from_mask(m));
    }
    if (m_member_oracle(Hypergraph(n - 1, r, std::move(rest)), k, t)) return true;
  }
  return false;
}

}  // namespace hypermax::testing

#endif  // HYPERMAX_TESTS_ORACLES_HPP_
