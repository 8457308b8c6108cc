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

#ifndef HYPERMAX_STRENGTH_HPP_
#define HYPERMAX_STRENGTH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermax/connectivity.hpp"
#include "hypermax/hypergraph.hpp"

namespace hypermax {

// One node of the recursive minimum-cut decomposition.
//
// `vertices` is in original labels. `kappa` is the edge connectivity of the
// induced sub-hypergraph (0 for a single vertex). For |vertices| >= 2, `cut`
// is the chosen minimum cut and `children` are the components left after
// deleting its crossing edges; they partition `vertices`.
struct StrengthNode {
  VertexSet vertices;
  std::int64_t kappa = 0;
  std::optional<Cut> cut;
  std::int64_t strength = 0;  // max of kappa over this subtree
  std::vector<StrengthNode> children;
};

struct StrengthResult {
  std::int64_t value = 0;
  StrengthNode tree;
};

// Maximum edge connectivity over all subhypergraphs, with the decomposition
// that certifies it. Requires |V| >= 1.
//
// A subhypergraph H' with kappa'(H') > |X| for a minimum cut X cannot have
// vertices on both sides of X, since X restricted to H' would cut it. So the
// maximum is either kappa'(H) or lives inside one component of H - X.
StrengthResult strength(const Hypergraph& h);

// max over vertex subsets S, |S| >= 2, of edge_connectivity_bruteforce(H[S]).
// Adding edges never lowers kappa', so induced subhypergraphs suffice.
// Requires |V| <= 12.
std::int64_t strength_bruteforce(const Hypergraph& h);

// Some S with kappa'(H[S]) > k, or nullopt when the strength is <= k.
// Vertices of degree <= k are peeled first; a (k+1)-connected piece keeps
// all its degrees above k, so it survives the peeling.
std::optional<VertexSet> find_subset_exceeding(const Hypergraph& h, std::int64_t k);

// First node in preorder whose kappa exceeds k.
const StrengthNode* first_node_exceeding(const StrengthNode& root, std::int64_t k);

// Indented outline, one node per line:
//   {0 1 2 3} kappa=3 strength=3 cut=[{0 1 2} {0 1 3} {0 2 3}]
std::string strength_tree_text(const StrengthNode& root);

// {"vertices":[...],"kappa":k,"strength":s,"cut":{"side":[...],"crossing":[[...]]}|null,
//  "children":[...]}
std::string strength_tree_json(const StrengthNode& root, int indent = 2);

}  // namespace hypermax

#endif  // HYPERMAX_STRENGTH_HPP_
