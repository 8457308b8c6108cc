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

#ifndef HYPERMAX_SEARCH_HPP_
#define HYPERMAX_SEARCH_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermax/binomial.hpp"
#include "hypermax/hypergraph.hpp"

namespace hypermax {

inline constexpr int kMaxSearchUniverse = 24;

struct SearchLimits {
  int jobs = 1;
  // Skip candidates with a vertex of degree < k. Applied only when the
  // n-range hypothesis holds, since only then kappa' = k is forced.
  bool prune = true;
  // Abort with ResourceLimitError once this many candidates reach the
  // maximality certifier. 0 means unlimited.
  std::int64_t max_certifications = 0;
  // Keep every maximal hypergraph found, not only one example per size.
  bool keep_hypergraphs = true;
};

struct SearchSummary {
  Params params;
  std::int64_t candidates = 0;      // all edge subsets, 2^C(n, r)
  std::int64_t certified = 0;       // candidates passed to the certifier
  std::int64_t count = 0;           // maximal hypergraphs found
  std::map<std::int64_t, std::int64_t> histogram;  // |E| -> frequency
  std::optional<std::int64_t> min_size;
  std::optional<std::int64_t> max_size;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::map<std::int64_t, Hypergraph> examples;  // first hypergraph of each size
  std::string pruning;
};

struct SearchResult {
  SearchSummary summary;
  // In stream order: increasing edge count, then lexicographic by the
  // sorted list of included edges.
  std::vector<Hypergraph> maximal;
};

// Exhaustive labeled enumeration of k-edge-maximal r-uniform hypergraphs on
// n vertices. Only connected spanning candidates are certified because k >= 2
// and n >= t force kappa' >= 1. Requires k >= 2, n >= t and C(n, r) <= 24.
SearchResult enumerate_maximal(int n, std::int64_t k, int r, const SearchLimits& limits = {});

struct ScanRow {
  Params params;
  std::optional<SearchSummary> summary;
  std::string error;  // set when the point failed
};

std::vector<ScanRow> extremal_scan(std::span<const Params> grid, const SearchLimits& limits = {});

// "n,k,r,t,count,min_size,max_size,lower_bound,upper_bound"
std::string csv_header();
// Row without trailing newline; empty min/max when count is 0.
std::string csv_row(const SearchSummary& summary);
// Header plus one row per successful point; failed points are left out.
std::string scan_csv(std::span<const ScanRow> rows);

std::string summary_text(const SearchSummary& summary);
std::string summary_json(const SearchSummary& summary, int indent = 2);

// Writes max_<n>_<k>_<r>_<index>.hg for each hypergraph, index in stream
// order from 0. Creates `dir` if needed.
void dump_maximal(const std::filesystem::path& dir, const SearchResult& result);

}  // namespace hypermax

#endif  // HYPERMAX_SEARCH_HPP_
