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

#include "hypermax/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hypermax/binomial.hpp"
#include "hypermax/errors.hpp"

namespace hypermax {

namespace {

std::string describe(Edge e) {
  std::string out = "{";
  bool first = true;
  for (const Vertex v : e) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void check_shape(int n, int r) {
  if (n < 0 || n > Hypergraph::kMaxVertices) {
    throw InvalidArgument("0 <= n <= 64 violated: n = " + std::to_string(n));
  }
  if (r < 2) throw InvalidArgument("r >= 2 violated: r = " + std::to_string(r));
}

}  // namespace

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) { check_shape(n, r); }

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
  check_shape(n, r);
  for (const Edge e : edges_) check_edge(e);
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InvalidArgument("repeated edge " + describe(*dup));
}

Hypergraph::Hypergraph(Trusted, int n, int r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {}

Hypergraph Hypergraph::from_lists(int n, int r, const std::vector<std::vector<Vertex>>& edges) {
  std::vector<Edge> sets;
  sets.reserve(edges.size());
  for (const auto& list : edges) {
    const Edge e = VertexSet::of(list);
    if (e.size() != static_cast<int>(list.size())) {
      throw InvalidArgument("edge lists a vertex twice: " + describe(e));
    }
    sets.push_back(e);
  }
  return Hypergraph(n, r, std::move(sets));
}

void Hypergraph::check_edge(Edge e) const {
  if (e.size() != r_) {
    throw InvalidArgument("edge " + describe(e) + " has " + std::to_string(e.size()) +
                          " vertices, expected r = " + std::to_string(r_));
  }
  if (!e.is_subset_of(vertices())) {
    throw InvalidArgument("edge " + describe(e) + " leaves [0, " + std::to_string(n_) + ")");
  }
}

bool Hypergraph::has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Hypergraph Hypergraph::with_edge(Edge e) const {
  check_edge(e);
  const auto at = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (at != edges_.end() && *at == e) throw InvalidArgument("edge " + describe(e) + " already present");
  std::vector<Edge> next;
  next.reserve(edges_.size() + 1);
  next.insert(next.end(), edges_.begin(), at);
  next.push_back(e);
  next.insert(next.end(), at, edges_.end());
  return Hypergraph(Trusted{}, n_, r_, std::move(next));
}

Hypergraph Hypergraph::without_edge(Edge e) const {
  const auto at = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (at == edges_.end() || *at != e) throw InvalidArgument("edge " + describe(e) + " not present");
  std::vector<Edge> next;
  next.reserve(edges_.size() - 1);
  next.insert(next.end(), edges_.begin(), at);
  next.insert(next.end(), at + 1, edges_.end());
  return Hypergraph(Trusted{}, n_, r_, std::move(next));
}

Hypergraph complete_hypergraph(int n, int r) {
  check_shape(n, r);
  std::vector<Edge> edges;
  if (n >= r) edges.reserve(static_cast<std::size_t>(binom(n, r)));
  for (const Edge e : Combinations(n, r)) edges.push_back(e);
  return Hypergraph(Hypergraph::Trusted{}, n, r, std::move(edges));
}

InducedSubhypergraph induced(const Hypergraph& h, VertexSet subset) {
  if (!subset.is_subset_of(h.vertices())) {
    throw InvalidArgument("induced: subset leaves [0, " + std::to_string(h.num_vertices()) + ")");
  }
  InducedSubhypergraph out{Hypergraph(subset.size(), h.uniformity()), subset.to_vector(),
                           std::vector<Vertex>(static_cast<std::size_t>(h.num_vertices()), -1)};
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    out.from_original[static_cast<std::size_t>(out.to_original[i])] = static_cast<Vertex>(i);
  }
  // Rank relabeling is monotone, so the filtered list stays sorted.
  std::vector<Edge> edges;
  for (const Edge e : h.edges()) {
    if (!e.is_subset_of(subset)) continue;
    std::uint64_t mask = 0;
    for (const Vertex v : e) mask |= std::uint64_t{1} << out.from_original[static_cast<std::size_t>(v)];
    edges.push_back(VertexSet::from_mask(mask));
  }
  out.graph = Hypergraph(Hypergraph::Trusted{}, subset.size(), h.uniformity(), std::move(edges));
  return out;
}

std::vector<Edge> edges_within(const Hypergraph& h, VertexSet subset) {
  std::vector<Edge> out;
  for (const Edge e : h.edges()) {
    if (e.is_subset_of(subset)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> non_edges(const Hypergraph& h) {
  std::vector<Edge> out;
  const auto edges = h.edges();
  auto it = edges.begin();
  // Both sequences are in lexicographic order; merge-walk them.
  for (const Edge e : Combinations(h.num_vertices(), h.uniformity())) {
    if (it != edges.end() && *it == e) {
      ++it;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

std::int64_t degree(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.num_vertices()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(h.num_vertices()) + ")");
  }
  return std::count_if(h.edges().begin(), h.edges().end(), [v](Edge e) { return e.contains(v); });
}

std::vector<std::int64_t> degrees(const Hypergraph& h) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(h.num_vertices()), 0);
  for (const Edge e : h.edges()) {
    for (const Vertex v : e) ++out[static_cast<std::size_t>(v)];
  }
  return out;
}

std::int64_t min_degree(const Hypergraph& h) {
  const auto d = degrees(h);
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

std::int64_t max_degree(const Hypergraph& h) {
  const auto d = degrees(h);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<Edge> incident_edges(const Hypergraph& h, Vertex v) {
  std::vector<Edge> out;
  for (const Edge e : h.edges()) {
    if (e.contains(v)) out.push_back(e);
  }
  return out;
}

bool is_complete(const Hypergraph& h) {
  return h.num_edges() == binom(h.num_vertices(), h.uniformity());
}

std::vector<VertexSet> components(VertexSet vertices, std::span<const Edge> edges) {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet().with(unseen.front());
    for (bool grew = true; grew;) {
      grew = false;
      for (const Edge e : edges) {
        if (e.intersects(comp) && !e.is_subset_of(comp)) {
          comp = comp | (e & vertices);
          grew = true;
        }
      }
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

std::vector<VertexSet> components(const Hypergraph& h) { return components(h.vertices(), h.edges()); }

bool is_connected(const Hypergraph& h) { return components(h).size() <= 1; }

}  // namespace hypermax
