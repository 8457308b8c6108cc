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

#ifndef HYPERMAX_CONSTRUCTIONS_HPP_
#define HYPERMAX_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypermax/hypergraph.hpp"

namespace hypermax {

// A labeled tree on 0..s-1.
struct TreeSpec {
  int s = 1;
  std::vector<std::pair<int, int>> edges;

  // Throws InvalidArgument unless `edges` is a spanning tree on 0..s-1.
  static TreeSpec make(int s, std::vector<std::pair<int, int>> edges);
  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;
};

TreeSpec path_tree(int s);
TreeSpec star_tree(int s);
// Uniform over labeled trees (Pruefer decoding), reproducible from the seed.
TreeSpec random_tree(int s, std::uint64_t seed);

// "s" on the first line, then s-1 lines "a b". '#' lines are skipped.
TreeSpec parse_tree(std::string_view text);
std::string to_text(const TreeSpec& tree);

enum class BuildMode { kLexicographic, kSeededRandom };

struct BuildStrategy {
  BuildMode mode = BuildMode::kLexicographic;
  std::uint64_t seed = 0;

  static BuildStrategy lexicographic() { return {}; }
  static BuildStrategy seeded(std::uint64_t seed) { return {BuildMode::kSeededRandom, seed}; }
};

// A member of M(n; k, r): K_t^r on 0..t-1, then each vertex i = t..n-1 joins
// with k distinct edges {i} + (r-1 earlier vertices). Lexicographic mode takes
// the k smallest (r-1)-subsets. Requires k, r >= 2 and t(k, r) <= n <= 64.
Hypergraph build_m_family(int n, std::int64_t k, int r, const BuildStrategy& strategy = {});

struct NtConstruction {
  Hypergraph graph;
  std::int64_t k = 0;
  int t = 0;
  TreeSpec tree;
  // crossing[i] joins the blocks of tree.edges[i].
  std::vector<std::vector<Edge>> crossing;
};

// A member of N(T): block i is K_t^r on [i t, (i+1) t); each tree edge {i, j}
// adds k = C(t-1, r-1) distinct edges inside the two blocks, each meeting
// both, jointly covering all 2t vertices. Requires t > r > 2, k r >= 2t and
// s t <= 64.
NtConstruction build_nt_family(int t, int r, const TreeSpec& tree, const BuildStrategy& strategy = {});

// Every vertex of a and b lies in some edge of `edges`.
bool covers_blocks(std::span<const Edge> edges, VertexSet a, VertexSet b);

// Edges {0..r-2, v} for v = r-1..n-1. Requires n >= r >= 2.
Hypergraph build_one_max_star(int n, int r);

// ceil((n-1)/(r-1)) edges through hub n-1 covering 0..n-2 in consecutive
// (r-1)-blocks, the last block taken flush against n-2. Requires n >= r >= 2.
Hypergraph build_one_max_partition(int n, int r);

}  // namespace hypermax

#endif  // HYPERMAX_CONSTRUCTIONS_HPP_
