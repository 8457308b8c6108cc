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

#include "hypermax/strength.hpp"

#include <algorithm>
#include <string>

#include "json_io.hpp"
#include "hypermax/errors.hpp"
#include "hypermax/io.hpp"

namespace hypermax {

namespace {

std::vector<Edge> inside(std::span<const Edge> edges, VertexSet subset) {
  std::vector<Edge> out;
  for (const Edge e : edges) {
    if (e.is_subset_of(subset)) out.push_back(e);
  }
  return out;
}

StrengthNode decompose(std::span<const Edge> all_edges, VertexSet subset) {
  StrengthNode node;
  node.vertices = subset;
  if (subset.size() < 2) return node;

  const std::vector<Edge> edges = inside(all_edges, subset);
  const auto best = detail::min_cut_within(subset, edges);
  node.kappa = best.value;
  node.strength = best.value;

  Cut cut{best.side, {}};
  std::vector<Edge> kept;
  for (const Edge e : edges) {
    (crosses(e, best.side) ? cut.crossing : kept).push_back(e);
  }
  node.cut = std::move(cut);

  for (const VertexSet part : components(subset, kept)) {
    node.children.push_back(decompose(kept, part));
    node.strength = std::max(node.strength, node.children.back().strength);
  }
  return node;
}

// Repeatedly drops vertices whose degree inside `subset` is at most k.
VertexSet peel(std::span<const Edge> edges, VertexSet subset, std::int64_t k) {
  for (bool changed = true; changed;) {
    changed = false;
    std::int64_t degree[VertexSet::kCapacity] = {};
    for (const Edge e : edges) {
      if (!e.is_subset_of(subset)) continue;
      for (const Vertex v : e) ++degree[v];
    }
    for (const Vertex v : subset) {
      if (degree[v] <= k) {
        subset = subset.without(v);
        changed = true;
      }
    }
  }
  return subset;
}

std::optional<VertexSet> search_exceeding(std::span<const Edge> all_edges, VertexSet subset, std::int64_t k) {
  subset = peel(all_edges, subset, k);
  if (subset.size() < 2) return std::nullopt;
  const std::vector<Edge> edges = inside(all_edges, subset);
  for (const VertexSet part : components(subset, edges)) {
    if (part.size() < 2) continue;
    const std::vector<Edge> local = inside(edges, part);
    const auto best = detail::min_cut_within(part, local);
    if (best.value > k) return part;
    std::vector<Edge> kept;
    for (const Edge e : local) {
      if (!crosses(e, best.side)) kept.push_back(e);
    }
    for (const VertexSet piece : components(part, kept)) {
      if (auto found = search_exceeding(kept, piece, k)) return found;
    }
  }
  return std::nullopt;
}

void write_text(const StrengthNode& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += "{" + format_set(node.vertices) + "} kappa=" + std::to_string(node.kappa) +
         " strength=" + std::to_string(node.strength);
  if (node.cut) {
    out += " cut=[";
    for (std::size_t i = 0; i < node.cut->crossing.size(); ++i) {
      if (i > 0) out += ' ';
      out += "{" + format_set(node.cut->crossing[i]) + "}";
    }
    out += "]";
  }
  out += '\n';
  for (const auto& child : node.children) write_text(child, depth + 1, out);
}

}  // namespace

StrengthResult strength(const Hypergraph& h) {
  if (h.num_vertices() < 1) throw InvalidArgument("strength requires |V| >= 1");
  StrengthResult out;
  out.tree = decompose(h.edges(), h.vertices());
  out.value = out.tree.strength;
  return out;
}

std::int64_t strength_bruteforce(const Hypergraph& h) {
  if (h.num_vertices() > kBruteforceStrengthLimit) {
    throw GuardError("strength_bruteforce requires n <= " + std::to_string(kBruteforceStrengthLimit) +
                     ", got n = " + std::to_string(h.num_vertices()));
  }
  const int n = h.num_vertices();
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet subset = VertexSet::from_mask(mask);
    if (subset.size() < 2) continue;
    best = std::max(best, edge_connectivity_bruteforce(induced(h, subset).graph));
  }
  return best;
}

std::optional<VertexSet> find_subset_exceeding(const Hypergraph& h, std::int64_t k) {
  return search_exceeding(h.edges(), h.vertices(), k);
}

const StrengthNode* first_node_exceeding(const StrengthNode& root, std::int64_t k) {
  if (root.kappa > k) return &root;
  for (const auto& child : root.children) {
    if (const auto* found = first_node_exceeding(child, k)) return found;
  }
  return nullptr;
}

std::string strength_tree_text(const StrengthNode& root) {
  std::string out;
  write_text(root, 0, out);
  return out;
}

std::string strength_tree_json(const StrengthNode& root, int indent) {
  return detail::to_json(root).dump(indent);
}

}  // namespace hypermax
