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

#include "hypermax/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "flow.hpp"
#include "hypermax/errors.hpp"

namespace hypermax {

namespace {

void require_vertex(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.num_vertices()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(h.num_vertices()) + ")");
  }
}

void require_within_guard(const Hypergraph& h, int limit, const char* what) {
  if (h.num_vertices() < 2 || h.num_vertices() > limit) {
    throw GuardError(std::string(what) + " requires 2 <= n <= " + std::to_string(limit) +
                     ", got n = " + std::to_string(h.num_vertices()));
  }
}

std::int64_t cut_degree_raw(std::span<const Edge> edges, VertexSet side) {
  return std::count_if(edges.begin(), edges.end(), [side](Edge e) { return crosses(e, side); });
}

}  // namespace

std::int64_t cut_degree(const Hypergraph& h, VertexSet side) {
  if (!side.is_subset_of(h.vertices())) throw InvalidArgument("cut side leaves V(H)");
  return cut_degree_raw(h.edges(), side);
}

Cut make_cut(const Hypergraph& h, VertexSet side) {
  if (!side.is_subset_of(h.vertices())) throw InvalidArgument("cut side leaves V(H)");
  Cut cut{side, {}};
  for (const Edge e : h.edges()) {
    if (crosses(e, side)) cut.crossing.push_back(e);
  }
  return cut;
}

std::int64_t local_edge_connectivity(const Hypergraph& h, Vertex s, Vertex t) {
  require_vertex(h, s);
  require_vertex(h, t);
  if (s == t) throw InvalidArgument("local_edge_connectivity requires s != t");
  detail::IncidenceNetwork net(h.vertices(), h.edges());
  return net.max_flow(s, t);
}

namespace detail {

SubsetCut min_cut_within(VertexSet vertices, std::span<const Edge> edges) {
  if (vertices.size() < 2) throw InvalidArgument("minimum cut needs at least two vertices");
  IncidenceNetwork net(vertices, edges);
  const Vertex source = vertices.front();
  SubsetCut best{std::numeric_limits<std::int64_t>::max(), VertexSet()};
  for (const Vertex target : vertices.without(source)) {
    const std::int64_t flow = net.max_flow(source, target, best.value);
    if (flow < best.value) {
      best = {flow, net.source_side()};
      if (flow == 0) break;
    }
  }
  return best;
}

}  // namespace detail

EdgeConnectivity edge_connectivity(const Hypergraph& h) {
  if (h.num_vertices() < 2) {
    throw InvalidArgument("edge connectivity requires |V| >= 2, got " + std::to_string(h.num_vertices()));
  }
  const auto best = detail::min_cut_within(h.vertices(), h.edges());
  EdgeConnectivity out{best.value, make_cut(h, best.side)};
  if (out.witness.weight() != out.value) throw InternalError("flow witness disagrees with its value");
  return out;
}

std::int64_t edge_connectivity_bruteforce(const Hypergraph& h) {
  require_within_guard(h, kBruteforceConnectivityLimit, "edge_connectivity_bruteforce");
  const int n = h.num_vertices();
  const std::uint64_t others = (std::uint64_t{1} << (n - 1)) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // Sides are {0} plus any proper subset of {1..n-1}; the complement of
  // each missing side is already covered.
  for (std::uint64_t rest = 0; rest < others; ++rest) {
    const VertexSet side = VertexSet::from_mask((rest << 1) | 1U);
    best = std::min(best, cut_degree_raw(h.edges(), side));
  }
  return best;
}

SuperEdgeConnectivity is_super_edge_connected(const Hypergraph& h) {
  require_within_guard(h, kBruteforceConnectivityLimit, "is_super_edge_connected");
  const int n = h.num_vertices();
  SuperEdgeConnectivity out;
  out.kappa = edge_connectivity_bruteforce(h);

  std::vector<std::vector<Edge>> peripheral;
  peripheral.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) peripheral.push_back(incident_edges(h, v));

  const std::uint64_t others = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t rest = 0; rest < others; ++rest) {
    const VertexSet side = VertexSet::from_mask((rest << 1) | 1U);
    if (cut_degree_raw(h.edges(), side) != out.kappa) continue;
    Cut cut = make_cut(h, side);
    const bool is_peripheral = std::any_of(peripheral.begin(), peripheral.end(),
                                           [&](const std::vector<Edge>& p) { return p == cut.crossing; });
    if (!is_peripheral) {
      out.counterexample = std::move(cut);
      return out;
    }
  }
  out.super_edge_connected = true;
  return out;
}

}  // namespace hypermax
