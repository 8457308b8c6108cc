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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "hypermax/binomial.hpp"
#include "hypermax/errors.hpp"
#include "hypermax/extremal.hpp"
#include "hypermax/io.hpp"
#include "hypermax/search.hpp"
#include "oracles.hpp"

namespace hypermax {
namespace {

// Every edge subset checked against the definition, in mask order.
std::vector<std::string> oracle_maximal(int n, int k, int r) {
  std::vector<Edge> all;
  for (const Edge e : Combinations(n, r)) all.push_back(e);
  std::vector<std::string> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(all[i]);
    }
    const Hypergraph h(n, r, std::move(edges));
    if (testing::maximal_oracle(h, k)) found.push_back(to_text(h));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::string> texts(const SearchResult& result) {
  std::vector<std::string> out;
  for (const Hypergraph& h : result.maximal) out.push_back(to_text(h));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Search, CoincidingBounds) {
  const SearchResult result = enumerate_maximal(5, 3, 3);
  const SearchSummary& s = result.summary;
  EXPECT_EQ(s.candidates, 1024);
  EXPECT_GT(s.count, 0);
  EXPECT_EQ(s.lower, 7);
  EXPECT_EQ(s.upper, 7);
  EXPECT_EQ(s.min_size, 7);
  EXPECT_EQ(s.max_size, 7);
  ASSERT_EQ(s.histogram.size(), 1U);
  EXPECT_EQ(s.histogram.at(7), s.count);
  EXPECT_EQ(static_cast<std::int64_t>(result.maximal.size()), s.count);
}

TEST(Search, MatchesDefinitionExhaustively) {
  for (auto [n, k, r] : {std::tuple{4, 2, 2}, {5, 2, 2}, {4, 3, 3}, {5, 3, 3}, {5, 4, 3}}) {
    const SearchResult result = enumerate_maximal(n, k, r, {.prune = false});
    EXPECT_EQ(texts(result), oracle_maximal(n, k, r)) << n << " " << k << " " << r;
  }
}

TEST(Search, CompleteCoreOnly) {
  const SearchResult result = enumerate_maximal(4, 3, 3);
  ASSERT_EQ(result.summary.count, 1);
  EXPECT_EQ(result.maximal[0], complete_hypergraph(4, 3));
}

TEST(Search, GraphSizes) {
  const SearchResult result = enumerate_maximal(6, 2, 2, {.jobs = 2});
  const SearchSummary& s = result.summary;
  EXPECT_EQ(s.candidates, 32768);
  EXPECT_EQ(s.lower, 8);
  EXPECT_EQ(s.upper, 9);
  ASSERT_GT(s.count, 0);
  EXPECT_GE(*s.min_size, 8);
  EXPECT_LE(*s.max_size, 9);
  for (const Hypergraph& h : result.maximal) {
    if (h.num_edges() == 9) EXPECT_TRUE(testing::m_member_oracle(h, 2, 3)) << to_text(h);
  }
}

TEST(Search, PruningDoesNotChangeResults) {
  for (auto [n, k, r] : {std::tuple{4, 2, 2}, {5, 2, 2}, {5, 3, 3}, {5, 4, 3}}) {
    const SearchResult pruned = enumerate_maximal(n, k, r);
    const SearchResult full = enumerate_maximal(n, k, r, {.prune = false});
    EXPECT_EQ(texts(pruned), texts(full));
    EXPECT_LE(pruned.summary.certified, full.summary.certified);
  }
}

TEST(Search, PruningOnlyUnderHypothesis) {
  // k = 4, r = 3, n = 4 lies outside the n-range hypothesis.
  const SearchResult r1 = enumerate_maximal(4, 4, 3);
  EXPECT_NE(r1.summary.pruning.find("none"), std::string::npos) << r1.summary.pruning;
  const SearchResult r2 = enumerate_maximal(5, 4, 3);
  EXPECT_EQ(r2.summary.pruning.find("none"), std::string::npos) << r2.summary.pruning;
}

TEST(Search, DeterministicAcrossJobs) {
  const SearchResult one = enumerate_maximal(5, 2, 2, {.jobs = 1});
  const SearchResult three = enumerate_maximal(5, 2, 2, {.jobs = 3});
  ASSERT_EQ(one.maximal.size(), three.maximal.size());
  for (std::size_t i = 0; i < one.maximal.size(); ++i) EXPECT_EQ(one.maximal[i], three.maximal[i]);
  EXPECT_EQ(summary_json(one.summary), summary_json(three.summary));
}

TEST(Search, StreamOrder) {
  const SearchResult result = enumerate_maximal(5, 2, 2);
  for (std::size_t i = 1; i < result.maximal.size(); ++i) {
    const Hypergraph& a = result.maximal[i - 1];
    const Hypergraph& b = result.maximal[i];
    ASSERT_LE(a.num_edges(), b.num_edges());
    if (a.num_edges() == b.num_edges()) {
      EXPECT_TRUE(std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
    }
  }
}

TEST(Search, EveryResultCertifies) {
  for (auto [n, k, r] : {std::tuple{6, 2, 2}, {5, 4, 3}, {6, 3, 2}}) {
    const SearchResult result = enumerate_maximal(n, k, r);
    ASSERT_GT(result.summary.count, 0);
    for (const Hypergraph& h : result.maximal) {
      EXPECT_EQ(is_k_edge_maximal(h, k).verdict, Verdict::kMaximal);
      EXPECT_GE(static_cast<std::int64_t>(h.num_edges()), lower_bound(n, k, r));
      EXPECT_LE(static_cast<std::int64_t>(h.num_edges()), upper_bound(n, k, r));
    }
  }
}

TEST(Search, Guards) {
  EXPECT_THROW(enumerate_maximal(8, 3, 3), GuardError);
  EXPECT_THROW(enumerate_maximal(5, 1, 3), InvalidArgument);
  EXPECT_THROW(enumerate_maximal(3, 3, 3), InvalidArgument);
  EXPECT_THROW(enumerate_maximal(5, 3, 3, {.max_certifications = 5}), ResourceLimitError);
}

TEST(Search, KeepHypergraphsOff) {
  const SearchResult result = enumerate_maximal(5, 3, 3, {.keep_hypergraphs = false});
  EXPECT_TRUE(result.maximal.empty());
  EXPECT_EQ(result.summary.count, 90);
  EXPECT_EQ(result.summary.examples.size(), 1U);
}

TEST(Scan, CsvRows) {
  const std::vector<Params> grid = {Params::make(4, 2, 2), Params::make(9, 3, 3), Params::make(5, 3, 3)};
  const auto rows = extremal_scan(grid);
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_FALSE(rows[1].summary.has_value());
  EXPECT_FALSE(rows[1].error.empty());
  EXPECT_EQ(scan_csv(rows),
            "n,k,r,t,count,min_size,max_size,lower_bound,upper_bound\n"
            "4,2,2,3,6,5,5,5,5\n"
            "5,3,3,4,90,7,7,7,7\n");
}

TEST(Scan, EmptyGrid) {
  EXPECT_EQ(scan_csv(extremal_scan({})), csv_header() + "\n");
}

TEST(Scan, ZeroCountLeavesSizesEmpty) {
  SearchSummary s;
  s.params = Params::make(4, 2, 2);
  s.lower = 5;
  s.upper = 5;
  EXPECT_EQ(csv_row(s), "4,2,2,3,0,,,5,5");
}

TEST(Summary, JsonFields) {
  const auto json = nlohmann::json::parse(summary_json(enumerate_maximal(4, 2, 2).summary));
  EXPECT_EQ(json.at("count"), 6);
  EXPECT_EQ(json.at("candidates"), 64);
  EXPECT_TRUE(json.contains("histogram"));
  EXPECT_EQ(json.at("lower_bound"), 5);
}

TEST(Dump, WritesCanonicalFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "hypermax_dump_test";
  std::filesystem::remove_all(dir);
  const SearchResult result = enumerate_maximal(4, 2, 2);
  dump_maximal(dir, result);
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(entry.path().filename().string().rfind("max_4_2_2_", 0), 0U);
  }
  EXPECT_EQ(files, 6);
  std::ifstream in(dir / "max_4_2_2_0.hg");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, to_text(result.maximal[0]));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace hypermax
