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

#include "flow.hpp"

#include <algorithm>
#include <queue>

namespace hypermax::detail {

namespace {
// Larger than any cut the network can carry (at most one unit per hyperedge).
constexpr std::int64_t kInfiniteCap = std::int64_t{1} << 40;
}  // namespace

IncidenceNetwork::IncidenceNetwork(VertexSet vertices, std::span<const Edge> edges)
    : node_of_vertex_(VertexSet::kCapacity, -1) {
  for (const Vertex v : vertices) {
    node_of_vertex_[static_cast<std::size_t>(v)] = static_cast<int>(vertex_of_node_.size());
    vertex_of_node_.push_back(v);
  }
  const int nv = static_cast<int>(vertex_of_node_.size());
  adj_.resize(static_cast<std::size_t>(nv) + 2 * edges.size());
  int next = nv;
  for (const Edge e : edges) {
    const int in = next++;
    const int out = next++;
    add_arc(in, out, 1);
    for (const Vertex v : e) {
      const int node = node_of_vertex_[static_cast<std::size_t>(v)];
      add_arc(node, in, kInfiniteCap);
      add_arc(out, node, kInfiniteCap);
    }
  }
  initial_cap_.resize(adj_.size());
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (const Arc& a : adj_[u]) initial_cap_[u].push_back(a.cap);
  }
  level_.resize(adj_.size());
  next_arc_.resize(adj_.size());
}

void IncidenceNetwork::add_arc(int from, int to, std::int64_t cap) {
  auto& fwd = adj_[static_cast<std::size_t>(from)];
  auto& bwd = adj_[static_cast<std::size_t>(to)];
  fwd.push_back({to, static_cast<int>(bwd.size()), cap});
  bwd.push_back({from, static_cast<int>(fwd.size()) - 1, 0});
}

void IncidenceNetwork::reset() {
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (std::size_t i = 0; i < adj_[u].size(); ++i) adj_[u][i].cap = initial_cap_[u][i];
  }
}

bool IncidenceNetwork::build_levels(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[static_cast<std::size_t>(s)] = 0;
  queue.push(s);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const Arc& a : adj_[static_cast<std::size_t>(u)]) {
      if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(t)] >= 0;
}

std::int64_t IncidenceNetwork::augment(int u, int t, std::int64_t pushed) {
  if (u == t) return pushed;
  auto& arcs = adj_[static_cast<std::size_t>(u)];
  for (std::size_t& i = next_arc_[static_cast<std::size_t>(u)]; i < arcs.size(); ++i) {
    Arc& a = arcs[i];
    if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(u)] + 1) {
      continue;
    }
    const std::int64_t got = augment(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t IncidenceNetwork::max_flow(Vertex s, Vertex t, std::int64_t limit) {
  reset();
  const int sn = node_of_vertex_[static_cast<std::size_t>(s)];
  const int tn = node_of_vertex_[static_cast<std::size_t>(t)];
  source_ = sn;
  std::int64_t flow = 0;
  while (flow < limit && build_levels(sn, tn)) {
    std::fill(next_arc_.begin(), next_arc_.end(), 0);
    while (flow < limit) {
      const std::int64_t got = augment(sn, tn, limit - flow);
      if (got == 0) break;
      flow += got;
    }
  }
  return flow;
}

VertexSet IncidenceNetwork::source_side() const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> stack{source_};
  seen[static_cast<std::size_t>(source_)] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const Arc& a : adj_[static_cast<std::size_t>(u)]) {
      if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
        seen[static_cast<std::size_t>(a.to)] = 1;
        stack.push_back(a.to);
      }
    }
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < vertex_of_node_.size(); ++i) {
    if (seen[i]) mask |= std::uint64_t{1} << vertex_of_node_[i];
  }
  return VertexSet::from_mask(mask);
}

}  // namespace hypermax::detail
