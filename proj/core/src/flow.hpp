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

#ifndef HYPERMAX_SRC_FLOW_HPP_
#define HYPERMAX_SRC_FLOW_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hypermax/vertex_set.hpp"

namespace hypermax::detail {

// Unit-capacity flow network for minimum s-t edge cuts of a hypergraph.
//
// Each hyperedge e becomes a pair e_in -> e_out with capacity 1; every vertex
// v of e gets uncapacitated arcs v -> e_in and e_out -> v. A minimum s-t cut
// of this network saturates exactly the hyperedges of a minimum s-t edge cut.
class IncidenceNetwork {
 public:
  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

  // `edges` must lie inside `vertices`.
  IncidenceNetwork(VertexSet vertices, std::span<const Edge> edges);

  // Maximum s-t flow, stopping once it reaches `limit`. When the returned
  // value is below `limit` it is exact and source_side() is a minimum cut.
  std::int64_t max_flow(Vertex s, Vertex t, std::int64_t limit = kUnbounded);

  // Vertices reachable from s in the residual network of the last run.
  VertexSet source_side() const;

 private:
  struct Arc {
    int to;
    int rev;
    std::int64_t cap;
  };

  void add_arc(int from, int to, std::int64_t cap);
  bool build_levels(int s, int t);
  std::int64_t augment(int u, int t, std::int64_t pushed);
  void reset();

  std::vector<Vertex> vertex_of_node_;
  std::vector<int> node_of_vertex_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<std::vector<std::int64_t>> initial_cap_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
  int source_ = -1;
};

}  // namespace hypermax::detail

#endif  // HYPERMAX_SRC_FLOW_HPP_
