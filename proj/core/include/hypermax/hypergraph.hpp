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

#ifndef HYPERMAX_HYPERGRAPH_HPP_
#define HYPERMAX_HYPERGRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hypermax/vertex_set.hpp"

namespace hypermax {

// An r-uniform simple hypergraph on vertices 0..n-1.
//
// The edge list is kept in canonical form: every edge has exactly r members
// in [0, n), no edge repeats, and edges are sorted lexicographically. Values
// are immutable; the mutators return new hypergraphs.
class Hypergraph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  // Edgeless hypergraph. Requires 0 <= n <= 64 and r >= 2.
  Hypergraph(int n, int r);

  // Validates and canonicalizes `edges`. Throws InvalidArgument on a wrong
  // cardinality, an out-of-range vertex, or a repeated edge.
  Hypergraph(int n, int r, std::vector<Edge> edges);

  static Hypergraph from_lists(int n, int r, const std::vector<std::vector<Vertex>>& edges);

  int num_vertices() const { return n_; }
  int uniformity() const { return r_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(0, n_); }

  bool has_edge(Edge e) const;

  // Throws InvalidArgument if `e` is not a valid r-subset or already present.
  Hypergraph with_edge(Edge e) const;
  // Throws InvalidArgument if `e` is absent.
  Hypergraph without_edge(Edge e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  struct Trusted {};
  Hypergraph(Trusted, int n, int r, std::vector<Edge> edges);
  void check_edge(Edge e) const;

  int n_;
  int r_;
  std::vector<Edge> edges_;

  friend Hypergraph complete_hypergraph(int n, int r);
  friend struct InducedSubhypergraph induced(const Hypergraph& h, VertexSet subset);
};

// K_n^r. Edgeless when n < r.
Hypergraph complete_hypergraph(int n, int r);

struct InducedSubhypergraph {
  Hypergraph graph;
  // graph vertex i is original vertex to_original[i].
  std::vector<Vertex> to_original;
  // Original vertex v maps to from_original[v], or -1 when v is not kept.
  std::vector<Vertex> from_original;
};

// H[S] with S relabeled by rank. Throws InvalidArgument if S leaves [0, n).
InducedSubhypergraph induced(const Hypergraph& h, VertexSet subset);

// Edges of H lying inside `subset`, in original labels.
std::vector<Edge> edges_within(const Hypergraph& h, VertexSet subset);

// E(H^c) in lexicographic order; size C(n, r) - |E(H)|.
std::vector<Edge> non_edges(const Hypergraph& h);

std::int64_t degree(const Hypergraph& h, Vertex v);
std::vector<std::int64_t> degrees(const Hypergraph& h);
// Both are 0 for a hypergraph with no vertices.
std::int64_t min_degree(const Hypergraph& h);
std::int64_t max_degree(const Hypergraph& h);

// Edges containing v, i.e. the peripheral cut E_H(v).
std::vector<Edge> incident_edges(const Hypergraph& h, Vertex v);

bool is_complete(const Hypergraph& h);

// Vertex sets of the connected components of (vertices, edges), ordered by
// smallest member. Isolated vertices are singleton components.
std::vector<VertexSet> components(VertexSet vertices, std::span<const Edge> edges);
std::vector<VertexSet> components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

}  // namespace hypermax

#endif  // HYPERMAX_HYPERGRAPH_HPP_
