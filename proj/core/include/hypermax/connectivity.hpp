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

#ifndef HYPERMAX_CONNECTIVITY_HPP_
#define HYPERMAX_CONNECTIVITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypermax/hypergraph.hpp"

namespace hypermax {

// An edge cut E_H(X): the side X and every edge meeting both X and V - X.
struct Cut {
  VertexSet side;
  std::vector<Edge> crossing;

  std::int64_t weight() const { return static_cast<std::int64_t>(crossing.size()); }
  friend bool operator==(const Cut&, const Cut&) = default;
};

constexpr bool crosses(Edge e, VertexSet side) { return e.intersects(side) && !e.is_subset_of(side); }

// d_H(X). Zero for X empty or X = V. X must lie inside V(H).
std::int64_t cut_degree(const Hypergraph& h, VertexSet side);
Cut make_cut(const Hypergraph& h, VertexSet side);

// Fewest edges whose removal separates s from t (unit-capacity max flow).
// Requires s != t, both vertices of h.
std::int64_t local_edge_connectivity(const Hypergraph& h, Vertex s, Vertex t);

struct EdgeConnectivity {
  std::int64_t value = 0;
  Cut witness;  // side contains vertex 0
};

// Exact kappa'(H) with a minimizing cut. Source 0 is fixed and targets are
// scanned in increasing order; the witness is the first minimizer found.
// Requires |V| >= 2.
EdgeConnectivity edge_connectivity(const Hypergraph& h);

// The same quantity by scanning all 2^(n-1) - 1 sides containing vertex 0.
// Requires 2 <= |V| <= 20.
std::int64_t edge_connectivity_bruteforce(const Hypergraph& h);

struct SuperEdgeConnectivity {
  bool super_edge_connected = false;
  std::int64_t kappa = 0;
  // A minimum cut whose crossing set is not E_H(v) for any v.
  std::optional<Cut> counterexample;
};

// Every minimum edge cut is compared against all peripheral cuts E_H(v).
// Requires 2 <= |V| <= 20.
SuperEdgeConnectivity is_super_edge_connected(const Hypergraph& h);

inline constexpr int kBruteforceConnectivityLimit = 20;
inline constexpr int kBruteforceStrengthLimit = 12;

namespace detail {

struct SubsetCut {
  std::int64_t value;
  VertexSet side;
};

// Minimum cut over the sub-hypergraph (vertices, edges), all edges inside
// `vertices`, |vertices| >= 2. Source is the smallest vertex, targets are
// scanned in increasing order.
SubsetCut min_cut_within(VertexSet vertices, std::span<const Edge> edges);

}  // namespace detail

}  // namespace hypermax

#endif  // HYPERMAX_CONNECTIVITY_HPP_
