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

#include "hypermax/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "json_io.hpp"
#include "hypermax/errors.hpp"
#include "hypermax/extremal.hpp"
#include "hypermax/io.hpp"

namespace hypermax {

namespace {

constexpr int kPrefixBits = 6;

struct Universe {
  int n;
  int r;
  std::vector<Edge> edges;                  // bit j of a candidate <-> edges[j]
  std::vector<std::uint32_t> incident;      // per vertex: candidate bits containing it
};

Universe make_universe(int n, int r) {
  Universe u{n, r, {}, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  for (const Edge e : Combinations(n, r)) {
    const auto bit = static_cast<std::uint32_t>(1) << u.edges.size();
    for (const Vertex v : e) u.incident[static_cast<std::size_t>(v)] |= bit;
    u.edges.push_back(e);
  }
  return u;
}

bool min_degree_at_least(const Universe& u, std::uint32_t candidate, std::int64_t k) {
  for (const std::uint32_t inc : u.incident) {
    if (std::popcount(candidate & inc) < k) return false;
  }
  return true;
}

bool connected(const Universe& u, std::uint32_t candidate) {
  if (u.n <= 1) return true;
  VertexSet reached = VertexSet().with(0);
  std::uint32_t unused = candidate;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t rest = unused; rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      const Edge e = u.edges[static_cast<std::size_t>(j)];
      if (e.intersects(reached)) {
        reached = reached | e;
        unused &= ~(static_cast<std::uint32_t>(1) << j);
        grew = true;
      }
    }
  }
  return reached.size() == u.n;
}

Hypergraph materialize(const Universe& u, std::uint32_t candidate) {
  std::vector<Edge> edges;
  for (std::uint32_t rest = candidate; rest != 0; rest &= rest - 1) {
    edges.push_back(u.edges[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return Hypergraph(u.n, u.r, std::move(edges));
}

// Stream order: popcount, then lexicographic by included edge indices (the
// VertexSet order applied to the inclusion mask).
bool stream_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return VertexSet::from_mask(a) < VertexSet::from_mask(b);
}

}  // namespace

SearchResult enumerate_maximal(int n, std::int64_t k, int r, const SearchLimits& limits) {
  if (k < 2) throw InvalidArgument("k >= 2 violated: k = " + std::to_string(k));
  if (r < 2) throw InvalidArgument("r >= 2 violated: r = " + std::to_string(r));
  const Params params = Params::make(n, k, r);
  if (n < params.t) {
    throw InvalidArgument("n >= t violated: n = " + std::to_string(n) + ", t = " + std::to_string(params.t));
  }
  const auto universe_size = try_binom(n, r);
  if (!universe_size || *universe_size > kMaxSearchUniverse) {
    throw GuardError("search requires C(n, r) <= " + std::to_string(kMaxSearchUniverse) + ", got C(" +
                     std::to_string(n) + ", " + std::to_string(r) + ")" +
                     (universe_size ? " = " + std::to_string(*universe_size) : std::string(" (overflow)")));
  }

  const Universe universe = make_universe(n, r);
  const int m = static_cast<int>(universe.edges.size());
  const bool prune = limits.prune && core_size_hypothesis(n, k, r);

  SearchResult result;
  SearchSummary& summary = result.summary;
  summary.params = params;
  summary.candidates = std::int64_t{1} << m;
  summary.lower = lower_bound(n, k, r);
  summary.upper = upper_bound(n, k, r);
  if (prune) {
    summary.pruning = "skip candidates with min degree < k; sound because the n-range hypothesis gives kappa' = k";
  } else if (limits.prune) {
    summary.pruning = "none; n-range hypothesis fails, so min degree >= k is not forced";
  } else {
    summary.pruning = "none; disabled by caller";
  }

  const int prefix_bits = std::min(m, kPrefixBits);
  const int low_bits = m - prefix_bits;
  const std::uint32_t partitions = static_cast<std::uint32_t>(1) << prefix_bits;
  std::vector<std::vector<std::uint32_t>> found(partitions);
  std::atomic<std::uint32_t> next_partition{0};
  std::atomic<std::int64_t> certified{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&] {
    try {
      for (;;) {
        const std::uint32_t part = next_partition.fetch_add(1);
        if (part >= partitions || abort.load()) return;
        const std::uint64_t count = std::uint64_t{1} << low_bits;
        for (std::uint64_t low = 0; low < count; ++low) {
          const auto candidate = static_cast<std::uint32_t>((static_cast<std::uint64_t>(part) << low_bits) | low);
          if (prune && !min_degree_at_least(universe, candidate, k)) continue;
          if (!connected(universe, candidate)) continue;
          const std::int64_t seen = certified.fetch_add(1) + 1;
          if (limits.max_certifications > 0 && seen > limits.max_certifications) {
            abort.store(true);
            return;
          }
          if (is_k_edge_maximal(materialize(universe, candidate), k).verdict == Verdict::kMaximal) {
            found[part].push_back(candidate);
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      abort.store(true);
    }
  };

  const int jobs = std::max(1, limits.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) workers.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  if (abort.load()) {
    throw ResourceLimitError("search exceeded " + std::to_string(limits.max_certifications) +
                             " certifications; partial results discarded");
  }

  std::vector<std::uint32_t> all;
  for (const auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end(), stream_less);

  summary.certified = certified.load();
  summary.count = static_cast<std::int64_t>(all.size());
  for (const std::uint32_t candidate : all) {
    const std::int64_t size = std::popcount(candidate);
    ++summary.histogram[size];
    if (!summary.examples.contains(size)) summary.examples.emplace(size, materialize(universe, candidate));
    if (limits.keep_hypergraphs) result.maximal.push_back(materialize(universe, candidate));
  }
  if (!summary.histogram.empty()) {
    summary.min_size = summary.histogram.begin()->first;
    summary.max_size = summary.histogram.rbegin()->first;
  }
  return result;
}

std::vector<ScanRow> extremal_scan(std::span<const Params> grid, const SearchLimits& limits) {
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (const Params& p : grid) {
    ScanRow row;
    row.params = p;
    try {
      row.params = Params::make(p.n, p.k, p.r);
      SearchLimits point = limits;
      point.keep_hypergraphs = false;
      row.summary = enumerate_maximal(p.n, p.k, p.r, point).summary;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_header() { return "n,k,r,t,count,min_size,max_size,lower_bound,upper_bound"; }

std::string csv_row(const SearchSummary& s) {
  const auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  return std::to_string(s.params.n) + "," + std::to_string(s.params.k) + "," + std::to_string(s.params.r) + "," +
         std::to_string(s.params.t) + "," + std::to_string(s.count) + "," + opt(s.min_size) + "," +
         opt(s.max_size) + "," + std::to_string(s.lower) + "," + std::to_string(s.upper);
}

std::string scan_csv(std::span<const ScanRow> rows) {
  std::string out = csv_header() + "\n";
  for (const auto& row : rows) {
    if (row.summary) out += csv_row(*row.summary) + "\n";
  }
  return out;
}

std::string summary_text(const SearchSummary& s) {
  std::string out;
  out += "params: n=" + std::to_string(s.params.n) + " k=" + std::to_string(s.params.k) +
         " r=" + std::to_string(s.params.r) + " t=" + std::to_string(s.params.t) + "\n";
  out += "candidates: " + std::to_string(s.candidates) + "\n";
  out += "certified: " + std::to_string(s.certified) + "\n";
  out += "maximal: " + std::to_string(s.count) + "\n";
  out += "bounds: [" + std::to_string(s.lower) + ", " + std::to_string(s.upper) + "]\n";
  if (s.min_size) {
    out += "observed: [" + std::to_string(*s.min_size) + ", " + std::to_string(*s.max_size) + "]\n";
  }
  out += "pruning: " + s.pruning + "\n";
  for (const auto& [size, freq] : s.histogram) {
    out += "  size " + std::to_string(size) + ": " + std::to_string(freq) + "\n";
  }
  return out;
}

std::string summary_json(const SearchSummary& s, int indent) { return detail::to_json(s).dump(indent); }

void dump_maximal(const std::filesystem::path& dir, const SearchResult& result) {
  std::filesystem::create_directories(dir);
  const Params& p = result.summary.params;
  const std::string stem =
      "max_" + std::to_string(p.n) + "_" + std::to_string(p.k) + "_" + std::to_string(p.r) + "_";
  for (std::size_t i = 0; i < result.maximal.size(); ++i) {
    write_hypergraph(dir / (stem + std::to_string(i) + ".hg"), result.maximal[i]);
  }
}

}  // namespace hypermax
