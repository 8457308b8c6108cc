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

// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypermax/binomial.hpp"
#include "hypermax/connectivity.hpp"
#include "hypermax/constructions.hpp"
#include "hypermax/extremal.hpp"
#include "hypermax/io.hpp"
#include "hypermax/search.hpp"
#include "hypermax/strength.hpp"
#include "oracles.hpp"

namespace hypermax {
namespace {

using testing::pascal;

// Wall-clock budgets in seconds.
constexpr double kBudget1 = 300;
constexpr double kBudget2 = 600;
constexpr double kBudget3 = 120;
constexpr double kBudget4 = 120;
constexpr double kBudget5 = 300;
constexpr double kBudget6 = 120;
constexpr double kBudget8 = 60;

// Sample sizes for the oracle comparison.
constexpr int kKappaSamples = 240;
constexpr int kStrengthSamples = 120;
constexpr std::uint64_t kSeed = 0x6b65646765;

// Detail lines printed per failing criterion.
constexpr std::size_t kMaxDetails = 40;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string line) {
    pass = false;
    details.push_back(std::move(line));
  }
};

struct Certified {
  Hypergraph graph;
  std::int64_t k;
  std::string origin;
};

std::vector<Certified> certified;

std::string params_text(int n, std::int64_t k, int r) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
}

Outcome criterion1() {
  Outcome o;
  int instances = 0;
  for (const auto& [k, r] :
       std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}, {6, 3}}) {
    const int t = testing::threshold_oracle(k, r);
    for (int n = t; n <= t + 4; ++n) {
      ++instances;
      const Hypergraph h = build_m_family(n, k, r);
      const std::string at = params_text(n, k, r) + " t=" + std::to_string(t);
      const std::int64_t expected = pascal(t, r) + static_cast<std::int64_t>(n - t) * k;
      if (static_cast<std::int64_t>(h.num_edges()) != expected) {
        o.fail(at + ": " + std::to_string(h.num_edges()) + " edges, expected " + std::to_string(expected));
      }
      if (min_degree(h) != k) {
        o.fail(at + ": min degree " + std::to_string(min_degree(h)) + ", expected " + std::to_string(k));
      }
      if (!is_super_edge_connected(h).super_edge_connected) o.fail(at + ": not super-edge-connected");
      const MaximalityReport rep = is_k_edge_maximal(h, k);
      if (rep.verdict != Verdict::kMaximal) {
        o.fail(at + ": verdict " + std::string(to_string(rep.verdict)));
      } else {
        certified.push_back({h, k, "criterion 1 " + at});
      }
    }
  }
  o.summary = "upper-bound family: " + std::to_string(instances) + " instances";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int instances = 0;
  for (int s = 2; s <= 3; ++s) {
    for (const auto& [name, tree] : {std::pair{"path", path_tree(s)}, std::pair{"star", star_tree(s)}}) {
      ++instances;
      const NtConstruction nt = build_nt_family(4, 3, tree);
      const std::string at = std::string(name) + std::to_string(s);
      const std::int64_t expected = s * 4 + (s - 1) * 3;
      const std::int64_t m = static_cast<std::int64_t>(nt.graph.num_edges());
      if (nt.k != 3) o.fail(at + ": k = " + std::to_string(nt.k));
      if (m != expected) o.fail(at + ": " + std::to_string(m) + " edges, expected " + std::to_string(expected));
      if (m != lower_bound(4 * s, 3, 3)) o.fail(at + ": edges differ from lower_bound");
      const MaximalityReport rep = is_k_edge_maximal(nt.graph, 3);
      if (rep.verdict != Verdict::kMaximal) {
        o.fail(at + ": verdict " + std::string(to_string(rep.verdict)));
      } else {
        certified.push_back({nt.graph, 3, "criterion 2 " + at});
      }
    }
  }
  o.summary = "lower-bound family: " + std::to_string(instances) + " trees";
  return o;
}

Outcome criterion3() {
  Outcome o;
  if (upper_bound(5, 3, 3) != 7 || lower_bound(5, 3, 3) != 7) o.fail("bounds at (5,3,3) are not both 7");
  const SearchResult result = enumerate_maximal(5, 3, 3);
  const SearchSummary& s = result.summary;
  if (s.candidates != 1024) o.fail("candidates " + std::to_string(s.candidates));
  if (s.count == 0) o.fail("no maximal hypergraph found");
  for (const Hypergraph& h : result.maximal) {
    if (h.num_edges() != 7) o.fail("size " + std::to_string(h.num_edges()) + ":\n" + to_text(h));
    certified.push_back({h, 3, "criterion 3 search (5,3,3)"});
  }
  o.summary = "coinciding bounds: " + std::to_string(s.count) + " maximal of " + std::to_string(s.candidates) +
              " candidates";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const SearchResult result = enumerate_maximal(6, 2, 2);
  const SearchSummary& s = result.summary;
  if (s.candidates != 32768) o.fail("candidates " + std::to_string(s.candidates));
  if (s.count == 0) o.fail("no maximal graph found");
  int at_nine = 0;
  for (const Hypergraph& h : result.maximal) {
    const auto m = h.num_edges();
    if (m < 8 || m > 9) o.fail("size " + std::to_string(m) + ":\n" + to_text(h));
    if (m == 9) {
      ++at_nine;
      if (!is_m_family_member(h, 2)) o.fail("size 9 but not an M-family member:\n" + to_text(h));
      if (!testing::m_member_oracle(h, 2, 3)) o.fail("size 9 but backtracking finds no build order:\n" + to_text(h));
    }
    certified.push_back({h, 2, "criterion 4 search (6,2,2)"});
  }
  std::string histogram;
  for (const auto& [size, freq] : s.histogram) histogram += " " + std::to_string(size) + ":" + std::to_string(freq);
  o.summary = "graph case: " + std::to_string(s.count) + " maximal, sizes" + histogram + ", " +
              std::to_string(at_nine) + " at size 9 checked";
  return o;
}

int kappa_oracle(const Hypergraph& h) {
  const int n = h.num_vertices();
  int best = static_cast<int>(h.num_edges());
  std::vector<char> side(static_cast<std::size_t>(n));
  for (std::uint64_t x = 1; x + 1 < (std::uint64_t{1} << n); ++x) {
    for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = static_cast<char>((x >> v) & 1U);
    best = std::min(best, testing::crossing_oracle(h, side));
  }
  return best;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  auto draw = [&](int max_n) {
    const int r = 2 + static_cast<int>(rng() % 3);
    const int n = std::max(r, 2) + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - std::max(r, 2) + 1));
    return testing::random_hypergraph(rng, n, r, density(rng));
  };
  for (int i = 0; i < kKappaSamples; ++i) {
    const Hypergraph h = draw(10);
    const std::int64_t flow = edge_connectivity(h).value;
    const std::int64_t brute = edge_connectivity_bruteforce(h);
    const int oracle = kappa_oracle(h);
    if (flow != brute || brute != oracle) {
      o.fail("kappa flow=" + std::to_string(flow) + " brute=" + std::to_string(brute) +
             " oracle=" + std::to_string(oracle) + " on\n" + to_text(h));
    }
  }
  for (int i = 0; i < kStrengthSamples; ++i) {
    const Hypergraph h = draw(8);
    const std::int64_t tree = strength(h).value;
    const std::int64_t brute = strength_bruteforce(h);
    const int oracle = testing::strength_oracle(h);
    if (tree != brute || brute != oracle) {
      o.fail("strength tree=" + std::to_string(tree) + " brute=" + std::to_string(brute) +
             " oracle=" + std::to_string(oracle) + " on\n" + to_text(h));
    }
  }
  o.summary = "oracle equivalence: " + std::to_string(kKappaSamples) + " kappa', " + std::to_string(kStrengthSamples) +
              " strength samples";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int instances = 0;
  int failures = 0;
  for (int r = 3; r <= 4; ++r) {
    for (int n = r; n <= 10; ++n) {
      const std::string at = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      const Hypergraph star = build_one_max_star(n, r);
      const Hypergraph partition = build_one_max_partition(n, r);
      const int star_size = n - r + 1;
      const int partition_size = (n - 1 + r - 2) / (r - 1);
      for (const auto& [name, h, size] : {std::tuple{"star", star, star_size}, {"partition", partition, partition_size}}) {
        ++instances;
        if (static_cast<int>(h.num_edges()) != size) {
          o.fail(std::string(name) + " " + at + ": " + std::to_string(h.num_edges()) + " edges, expected " +
                 std::to_string(size));
        }
        const MaximalityReport rep = is_k_edge_maximal(h, 1);
        if (rep.verdict == Verdict::kMaximal) continue;
        ++failures;
        std::string line = std::string(name) + " " + at + ": " + std::string(to_string(rep.verdict));
        if (rep.addable_edge) {
          const int oracle = testing::strength_oracle(h.with_edge(*rep.addable_edge));
          line += " {" + format_set(*rep.addable_edge) + "}, subset-enumeration strength of H+e = " +
                  std::to_string(oracle);
        }
        o.fail(line);
      }
    }
  }
  o.summary = "1-edge-maximal families: " + std::to_string(instances - failures) + "/" + std::to_string(instances) +
              " certify";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int checked = 0;
  for (const Certified& c : certified) {
    const Hypergraph& h = c.graph;
    if (!core_size_hypothesis(h.num_vertices(), c.k, h.uniformity())) continue;
    ++checked;
    const std::int64_t kappa = edge_connectivity(h).value;
    const std::int64_t value = strength(h).value;
    if (kappa != c.k || value != c.k) {
      o.fail(c.origin + ": kappa'=" + std::to_string(kappa) + " strength=" + std::to_string(value) +
             " k=" + std::to_string(c.k));
    }
  }
  o.summary = "kappa' = strength = k: " + std::to_string(checked) + " of " + std::to_string(certified.size()) +
              " certified hypergraphs in range";
  if (checked == 0) o.fail("nothing to check");
  return o;
}

Outcome criterion8() {
  Outcome o;
  int cases = 0;
  for (int r = 2; r <= 4; ++r) {
    for (int n = 1; n <= 12; ++n) {
      const Hypergraph h = complete_hypergraph(n, r);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        ++cases;
        const VertexSet side = VertexSet::from_mask(x);
        const int n1 = side.size();
        const std::int64_t expected = pascal(n, r) - pascal(n1, r) - pascal(n - n1, r);
        if (cut_degree(h, side) != expected) {
          o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " side {" + format_set(side) +
                 "}: " + std::to_string(cut_degree(h, side)) + " != " + std::to_string(expected));
        }
      }
    }
  }
  o.summary = "crossing-count identity: " + std::to_string(cases) + " sides";
  return o;
}

bool report(int id, const std::function<Outcome()>& body, double budget) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && seconds > budget) o.fail("over budget");
  char timing[64];
  if (budget > 0) {
    std::snprintf(timing, sizeof timing, "[%.2f s of %.0f s]", seconds, budget);
  } else {
    std::snprintf(timing, sizeof timing, "[%.2f s]", seconds);
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.summary << " " << timing << "\n";
  for (std::size_t i = 0; i < o.details.size() && i < kMaxDetails; ++i) {
    std::istringstream lines(o.details[i]);
    for (std::string line; std::getline(lines, line);) std::cout << "    " << line << "\n";
  }
  if (o.details.size() > kMaxDetails) std::cout << "    ... " << o.details.size() - kMaxDetails << " more\n";
  return o.pass;
}

}  // namespace
}  // namespace hypermax

int main() {
  using namespace hypermax;
  int failed = 0;
  failed += !report(1, criterion1, kBudget1);
  failed += !report(2, criterion2, kBudget2);
  failed += !report(3, criterion3, kBudget3);
  failed += !report(4, criterion4, kBudget4);
  failed += !report(5, criterion5, kBudget5);
  failed += !report(6, criterion6, kBudget6);
  failed += !report(7, criterion7, 0);
  failed += !report(8, criterion8, kBudget8);
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " of 8 criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
