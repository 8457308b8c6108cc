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

#include "hypermax/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

#include "hypermax/binomial.hpp"
#include "hypermax/errors.hpp"
#include "rng.hpp"

namespace hypermax {

namespace {

void require(bool ok, const std::string& inequality, const std::string& values) {
  if (!ok) throw InvalidArgument(inequality + " violated: " + values);
}

Edge edge_from_members(const std::vector<Vertex>& members, VertexSet local) {
  std::uint64_t mask = 0;
  for (const Vertex i : local) mask |= std::uint64_t{1} << members[static_cast<std::size_t>(i)];
  return VertexSet::from_mask(mask);
}

// k distinct (r-1)-subsets of {0..i-1}.
std::vector<VertexSet> pick_attachments(int i, int r, std::int64_t k, const BuildStrategy& strategy,
                                        detail::Rng& rng) {
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(k));
  if (strategy.mode == BuildMode::kLexicographic) {
    for (const VertexSet s : Combinations(i, r - 1)) {
      if (static_cast<std::int64_t>(out.size()) == k) break;
      out.push_back(s);
    }
    return out;
  }
  const auto pool_size = try_binom(i, r - 1);
  constexpr std::int64_t kEnumerateUpTo = std::int64_t{1} << 16;
  if (pool_size && *pool_size <= kEnumerateUpTo) {
    std::vector<VertexSet> pool(Combinations(i, r - 1).begin(), Combinations(i, r - 1).end());
    // Partial Fisher-Yates: the first k slots become a uniform k-sample.
    for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
      const std::size_t pick = j + static_cast<std::size_t>(rng.below(pool.size() - j));
      std::swap(pool[j], pool[pick]);
      out.push_back(pool[j]);
    }
    return out;
  }
  std::set<std::uint64_t> seen;
  while (static_cast<std::int64_t>(out.size()) < k) {
    std::vector<Vertex> prior(static_cast<std::size_t>(i));
    for (int v = 0; v < i; ++v) prior[static_cast<std::size_t>(v)] = v;
    for (int j = 0; j < r - 1; ++j) {
      std::swap(prior[static_cast<std::size_t>(j)],
                prior[static_cast<std::size_t>(j) + rng.below(static_cast<std::uint64_t>(i - j))]);
    }
    const VertexSet s = VertexSet::of(std::span<const Vertex>(prior.data(), static_cast<std::size_t>(r - 1)));
    if (seen.insert(s.mask()).second) out.push_back(s);
  }
  return out;
}

// E_ij for blocks listed in `a` and `b` (each t vertices, possibly permuted).
// The 2t vertices are interleaved a0 b0 a1 b1 ... and cut into k contiguous
// chunks of near-equal size; every chunk of two or more vertices already
// meets both blocks. Each chunk is then completed to r vertices by the first
// fill, in the order of the interleaved list, that makes the edge meet both
// blocks and differ from earlier edges.
std::vector<Edge> covering_system(const std::vector<Vertex>& a, const std::vector<Vertex>& b, int r,
                                  std::int64_t k) {
  const std::size_t t = a.size();
  std::vector<Vertex> order;
  order.reserve(2 * t);
  for (std::size_t i = 0; i < t; ++i) {
    order.push_back(a[i]);
    order.push_back(b[i]);
  }
  const VertexSet block_a = VertexSet::of(a);
  const VertexSet block_b = VertexSet::of(b);
  const auto total = static_cast<std::int64_t>(order.size());
  const std::int64_t base = total / k;
  const std::int64_t extra = total % k;

  std::vector<Edge> out;
  std::set<std::uint64_t> used;
  std::size_t next = 0;
  for (std::int64_t q = 0; q < k; ++q) {
    const auto chunk = static_cast<std::size_t>(base + (q < extra ? 1 : 0));
    std::vector<Vertex> core(order.begin() + static_cast<std::ptrdiff_t>(next),
                             order.begin() + static_cast<std::ptrdiff_t>(next + chunk));
    next += chunk;
    const VertexSet core_set = VertexSet::of(core);
    std::vector<Vertex> rest;
    for (const Vertex v : order) {
      if (!core_set.contains(v)) rest.push_back(v);
    }
    const int need = r - static_cast<int>(core.size());
    if (need < 0) throw InternalError("covering chunk larger than r");
    bool placed = false;
    for (const VertexSet local : Combinations(static_cast<int>(rest.size()), need)) {
      const Edge e = core_set | edge_from_members(rest, local);
      if (!e.intersects(block_a) || !e.intersects(block_b)) continue;
      if (!used.insert(e.mask()).second) continue;
      out.push_back(e);
      placed = true;
      break;
    }
    if (!placed) throw InternalError("no distinct crossing completion for covering chunk");
  }
  return out;
}

}  // namespace

TreeSpec TreeSpec::make(int s, std::vector<std::pair<int, int>> edges) {
  require(s >= 1, "s >= 1", "s = " + std::to_string(s));
  require(static_cast<int>(edges.size()) == s - 1, "|E(T)| = s - 1",
          std::to_string(edges.size()) + " edges for s = " + std::to_string(s));
  std::vector<int> parent(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : edges) {
    require(a >= 0 && a < s && b >= 0 && b < s, "tree vertex in [0, s)",
            "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    require(a != b, "no tree loops", "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    const int ra = find(a);
    const int rb = find(b);
    require(ra != rb, "acyclic tree", "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") closes a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  // s - 1 edges without a cycle on s vertices always connect them.
  return TreeSpec{s, std::move(edges)};
}

TreeSpec path_tree(int s) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
  return TreeSpec::make(s, std::move(edges));
}

TreeSpec star_tree(int s) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < s; ++i) edges.emplace_back(0, i);
  return TreeSpec::make(s, std::move(edges));
}

TreeSpec random_tree(int s, std::uint64_t seed) {
  require(s >= 1, "s >= 1", "s = " + std::to_string(s));
  if (s <= 2) return path_tree(s);
  detail::Rng rng(seed);
  std::vector<int> code(static_cast<std::size_t>(s - 2));
  for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(s)));

  std::vector<int> remaining(static_cast<std::size_t>(s), 1);
  for (const int c : code) ++remaining[static_cast<std::size_t>(c)];
  std::vector<std::pair<int, int>> edges;
  for (const int c : code) {
    int leaf = 0;
    while (remaining[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    --remaining[static_cast<std::size_t>(leaf)];
    --remaining[static_cast<std::size_t>(c)];
  }
  int u = -1;
  for (int v = 0; v < s; ++v) {
    if (remaining[static_cast<std::size_t>(v)] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      edges.emplace_back(u, v);
    }
  }
  return TreeSpec::make(s, std::move(edges));
}

TreeSpec parse_tree(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::vector<int> row_line;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    std::vector<long long> values;
    std::size_t i = first;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
        throw ParseError(line_no, "expected an integer in '" + std::string(line) + "'");
      }
      values.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    rows.push_back(std::move(values));
    row_line.push_back(line_no);
  }
  if (rows.empty()) throw ParseError(0, "missing tree header 's'");
  if (rows[0].size() != 1) throw ParseError(row_line[0], "tree header must be a single integer s");
  const long long s = rows[0][0];
  if (s < 1 || s > VertexSet::kCapacity) throw ParseError(row_line[0], "s must lie in [1, 64]");
  if (static_cast<long long>(rows.size()) - 1 != s - 1) {
    throw ParseError(row_line[0], "expected " + std::to_string(s - 1) + " tree edges, found " +
                                      std::to_string(rows.size() - 1));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw ParseError(row_line[i], "tree edge must be 'a b'");
    if (rows[i][0] < 0 || rows[i][0] >= s || rows[i][1] < 0 || rows[i][1] >= s) {
      throw ParseError(row_line[i], "tree vertex outside [0, s)");
    }
    edges.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
  }
  try {
    return TreeSpec::make(static_cast<int>(s), std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

std::string to_text(const TreeSpec& tree) {
  std::string out = std::to_string(tree.s) + "\n";
  for (const auto& [a, b] : tree.edges) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

Hypergraph build_m_family(int n, std::int64_t k, int r, const BuildStrategy& strategy) {
  require(k >= 2, "k >= 2", "k = " + std::to_string(k));
  require(r >= 2, "r >= 2", "r = " + std::to_string(r));
  const int t = threshold_t(k, r);
  require(n >= t, "n >= t", "n = " + std::to_string(n) + ", t = " + std::to_string(t));
  require(n <= Hypergraph::kMaxVertices, "n <= 64", "n = " + std::to_string(n));
  // Each of the bounded quantities must be representable.
  (void)checked_add(binom(t, r), checked_mul(n - t, k));

  detail::Rng rng(strategy.seed);
  std::vector<Edge> edges(Combinations(t, r).begin(), Combinations(t, r).end());
  for (int i = t; i < n; ++i) {
    // C(i, r-1) >= C(t, r-1) > k, so k distinct choices exist.
    for (const VertexSet s : pick_attachments(i, r, k, strategy, rng)) edges.push_back(s.with(i));
  }
  return Hypergraph(n, r, std::move(edges));
}

NtConstruction build_nt_family(int t, int r, const TreeSpec& tree, const BuildStrategy& strategy) {
  require(r > 2, "r > 2", "r = " + std::to_string(r));
  require(t > r, "t > r", "t = " + std::to_string(t) + ", r = " + std::to_string(r));
  const std::int64_t k = binom(t - 1, r - 1);
  require(checked_mul(k, r) >= 2 * static_cast<std::int64_t>(t), "k r >= 2t",
          "k = " + std::to_string(k) + ", r = " + std::to_string(r) + ", t = " + std::to_string(t));
  const TreeSpec checked_tree = TreeSpec::make(tree.s, tree.edges);
  require(static_cast<std::int64_t>(tree.s) * t <= Hypergraph::kMaxVertices, "s t <= 64",
          "s = " + std::to_string(tree.s) + ", t = " + std::to_string(t));
  const int n = tree.s * t;

  detail::Rng rng(strategy.seed);
  std::vector<Edge> edges;
  for (int i = 0; i < tree.s; ++i) {
    for (const VertexSet local : Combinations(t, r)) edges.push_back(VertexSet::from_mask(local.mask() << (i * t)));
  }

  NtConstruction out{Hypergraph(n, r), k, t, checked_tree, {}};
  for (const auto& [i, j] : tree.edges) {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (int v = 0; v < t; ++v) {
      a.push_back(i * t + v);
      b.push_back(j * t + v);
    }
    if (strategy.mode == BuildMode::kSeededRandom) {
      rng.shuffle(a);
      rng.shuffle(b);
    }
    std::vector<Edge> system = covering_system(a, b, r, k);
    const VertexSet block_a = VertexSet::range(i * t, (i + 1) * t);
    const VertexSet block_b = VertexSet::range(j * t, (j + 1) * t);
    for (const Edge e : system) {
      if (!e.is_subset_of(block_a | block_b) || !e.intersects(block_a) || !e.intersects(block_b)) {
        throw InternalError("covering edge does not join its two blocks");
      }
    }
    if (!covers_blocks(system, block_a, block_b)) throw InternalError("covering system misses a vertex");
    std::sort(system.begin(), system.end());
    edges.insert(edges.end(), system.begin(), system.end());
    out.crossing.push_back(std::move(system));
  }
  out.graph = Hypergraph(n, r, std::move(edges));
  return out;
}

bool covers_blocks(std::span<const Edge> edges, VertexSet a, VertexSet b) {
  VertexSet seen;
  for (const Edge e : edges) seen = seen | e;
  return (a | b).is_subset_of(seen);
}

Hypergraph build_one_max_star(int n, int r) {
  require(r >= 2, "r >= 2", "r = " + std::to_string(r));
  require(n >= r, "n >= r", "n = " + std::to_string(n) + ", r = " + std::to_string(r));
  require(n <= Hypergraph::kMaxVertices, "n <= 64", "n = " + std::to_string(n));
  const VertexSet shared = VertexSet::range(0, r - 1);
  std::vector<Edge> edges;
  for (Vertex v = r - 1; v < n; ++v) edges.push_back(shared.with(v));
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph build_one_max_partition(int n, int r) {
  require(r >= 2, "r >= 2", "r = " + std::to_string(r));
  require(n >= r, "n >= r", "n = " + std::to_string(n) + ", r = " + std::to_string(r));
  require(n <= Hypergraph::kMaxVertices, "n <= 64", "n = " + std::to_string(n));
  const Vertex hub = n - 1;
  const int block = r - 1;
  const int count = (n - 1 + block - 1) / block;
  std::vector<Edge> edges;
  for (int i = 1; i < count; ++i) edges.push_back(VertexSet::range((i - 1) * block, i * block).with(hub));
  edges.push_back(VertexSet::range(n - r, n - 1).with(hub));
  return Hypergraph(n, r, std::move(edges));
}

}  // namespace hypermax
