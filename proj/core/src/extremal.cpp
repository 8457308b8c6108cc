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

#include "hypermax/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "json_io.hpp"
#include "hypermax/connectivity.hpp"
#include "hypermax/errors.hpp"
#include "hypermax/io.hpp"
#include "hypermax/strength.hpp"

namespace hypermax {

namespace {

// Validates the bound hypotheses and returns t(k, r).
int bound_threshold(int n, std::int64_t k, int r) {
  if (k < 2) throw InvalidArgument("k >= 2 violated: k = " + std::to_string(k));
  if (r < 2) throw InvalidArgument("r >= 2 violated: r = " + std::to_string(r));
  const int t = threshold_t(k, r);
  if (n < t) {
    throw InvalidArgument("n >= t violated: n = " + std::to_string(n) + ", t = " + std::to_string(t));
  }
  return t;
}

}  // namespace

std::int64_t upper_bound(int n, std::int64_t k, int r) {
  const int t = bound_threshold(n, k, r);
  return checked_add(binom(t, r), checked_mul(n - t, k));
}

std::int64_t lower_bound(int n, std::int64_t k, int r) {
  const int t = bound_threshold(n, k, r);
  const std::int64_t block_deficit = checked_sub(checked_mul(t - 1, k), binom(t, r));
  return checked_sub(checked_mul(n - 1, k), checked_mul(block_deficit, n / t));
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kMaximal:
      return "maximal";
    case Verdict::kStrengthExceedsK:
      return "strength_exceeds_k";
    case Verdict::kAddableNonEdge:
      return "addable_non_edge";
  }
  return "unknown";
}

std::string_view to_string(ClauseStatus status) {
  switch (status) {
    case ClauseStatus::kPass:
      return "pass";
    case ClauseStatus::kFail:
      return "fail";
    case ClauseStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

MaximalityReport is_k_edge_maximal(const Hypergraph& h, std::int64_t k, const MaximalityOptions& options) {
  if (k < 1) throw InvalidArgument("k >= 1 violated: k = " + std::to_string(k));
  if (h.num_vertices() < h.uniformity()) {
    throw InvalidArgument("|V| >= r violated: |V| = " + std::to_string(h.num_vertices()) +
                          ", r = " + std::to_string(h.uniformity()));
  }
  MaximalityReport report;
  report.k = k;
  const StrengthResult s = strength(h);
  report.strength_value = s.value;
  if (s.value > k) {
    const StrengthNode* node = first_node_exceeding(s.tree, k);
    report.verdict = Verdict::kStrengthExceedsK;
    report.dense_subset = node->vertices;
    report.dense_subset_kappa = node->kappa;
    return report;
  }

  const std::vector<Edge> candidates = non_edges(h);
  const std::size_t total = candidates.size();
  auto addable = [&](std::size_t i) { return !find_subset_exceeding(h.with_edge(candidates[i]), k); };

  std::size_t first_bad = total;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) {
      if (addable(i)) {
        first_bad = i;
        break;
      }
    }
  } else {
    // Each worker walks a stride in increasing order and stops once it passes
    // the best failure seen so far, so the minimum index wins.
    std::atomic<std::size_t> best{total};
    {
      std::vector<std::jthread> workers;
      for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t i = static_cast<std::size_t>(w); i < total; i += static_cast<std::size_t>(jobs)) {
            if (i >= best.load()) return;
            if (addable(i)) {
              std::size_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              return;
            }
          }
        });
      }
    }
    first_bad = best.load();
  }

  if (first_bad < total) {
    report.verdict = Verdict::kAddableNonEdge;
    report.addable_edge = candidates[first_bad];
    report.non_edges_checked = static_cast<std::int64_t>(first_bad) + 1;
  } else {
    report.verdict = Verdict::kMaximal;
    report.non_edges_checked = static_cast<std::int64_t>(total);
  }
  return report;
}

bool witness_holds(const Hypergraph& h, const MaximalityReport& report) {
  switch (report.verdict) {
    case Verdict::kMaximal:
      return true;
    case Verdict::kStrengthExceedsK: {
      if (!report.dense_subset || report.dense_subset->size() < 2) return false;
      const auto sub = induced(h, *report.dense_subset);
      return edge_connectivity(sub.graph).value > report.k;
    }
    case Verdict::kAddableNonEdge: {
      if (!report.addable_edge || h.has_edge(*report.addable_edge)) return false;
      return strength(h.with_edge(*report.addable_edge)).value <= report.k;
    }
  }
  return false;
}

std::string report_text(const MaximalityReport& report) {
  std::string out = "verdict: " + std::string(to_string(report.verdict)) + "\n";
  out += "k: " + std::to_string(report.k) + "\n";
  out += "strength: " + std::to_string(report.strength_value) + "\n";
  if (report.dense_subset) {
    out += "witness subset: {" + format_set(*report.dense_subset) + "} with kappa' = " +
           std::to_string(report.dense_subset_kappa) + "\n";
  }
  if (report.addable_edge) {
    out += "witness non-edge: {" + format_set(*report.addable_edge) + "}\n";
  }
  out += "non-edges checked: " + std::to_string(report.non_edges_checked) + "\n";
  return out;
}

std::string report_json(const MaximalityReport& report, int indent) {
  return detail::to_json(report).dump(indent);
}

bool AuditReport::any_failed() const {
  return std::any_of(clauses.begin(), clauses.end(),
                     [](const AuditClause& c) { return c.status == ClauseStatus::kFail; });
}

const AuditClause* AuditReport::find(std::string_view id) const {
  for (const auto& c : clauses) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

AuditReport audit_maximal(const Hypergraph& h, std::int64_t k) {
  if (k < 2) throw InvalidArgument("audit requires k >= 2, got k = " + std::to_string(k));
  const int n = h.num_vertices();
  const int r = h.uniformity();
  if (n < 2) throw InvalidArgument("audit requires |V| >= 2");

  AuditReport report;
  report.params = Params::make(n, k, r);
  report.num_edges = h.num_edges();
  const int t = report.params.t;
  const bool hypothesis = core_size_hypothesis(n, k, r);
  const std::string hypothesis_note = "n-range hypothesis fails (n = " + std::to_string(n) +
                                      ", t = " + std::to_string(t) + ", C(t-1, r-1) = " +
                                      std::to_string(binom(t - 1, r - 1)) + ")";

  const EdgeConnectivity kappa = edge_connectivity(h);
  const std::int64_t strength_value = strength(h).value;

  {
    AuditClause c{"connectivity", "kappa'(H) = strength(H) = k", ClauseStatus::kSkipped, "", {}};
    if (!hypothesis) {
      c.detail = hypothesis_note;
    } else {
      c.status = kappa.value == k && strength_value == k ? ClauseStatus::kPass : ClauseStatus::kFail;
      c.detail = "kappa' = " + std::to_string(kappa.value) + ", strength = " + std::to_string(strength_value);
      if (c.status == ClauseStatus::kFail) c.witnesses.push_back(kappa.witness.side);
    }
    report.clauses.push_back(std::move(c));
  }

  {
    AuditClause c{"size-bounds", "lower_bound <= |E| <= upper_bound", ClauseStatus::kSkipped, "", {}};
    if (n < t) {
      c.detail = "n < t";
    } else {
      const std::int64_t lo = lower_bound(n, k, r);
      const std::int64_t hi = upper_bound(n, k, r);
      const std::int64_t m = h.num_edges();
      c.status = lo <= m && m <= hi ? ClauseStatus::kPass : ClauseStatus::kFail;
      c.detail = std::to_string(lo) + " <= " + std::to_string(m) + " <= " + std::to_string(hi);
      if (m == hi) c.detail += " (attains upper bound)";
      if (m == lo) c.detail += " (attains lower bound)";
    }
    report.clauses.push_back(std::move(c));
  }

  std::vector<Edge> kept;
  for (const Edge e : h.edges()) {
    if (!crosses(e, kappa.witness.side)) kept.push_back(e);
  }
  const std::vector<VertexSet> parts = components(h.vertices(), kept);
  constexpr std::size_t kMaxParts = 16;

  std::vector<VertexSet> sides;
  if (parts.size() <= kMaxParts) {
    const std::uint64_t full = (std::uint64_t{1} << parts.size()) - 1;
    for (std::uint64_t pick = 1; pick < full; ++pick) {
      VertexSet side;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if ((pick >> i) & 1U) side = side | parts[i];
      }
      sides.push_back(side);
    }
  }

  {
    AuditClause c{"sides-maximal", "every union of some but not all components of H - X is k-edge-maximal",
                  ClauseStatus::kSkipped, "", {}};
    if (parts.size() > kMaxParts) {
      c.detail = std::to_string(parts.size()) + " components exceed the enumeration cap";
    } else {
      c.status = ClauseStatus::kPass;
      int checked = 0;
      for (const VertexSet side : sides) {
        ++checked;
        if (side.size() < r) continue;  // no r-subsets: trivially maximal
        const auto sub = induced(h, side);
        if (is_k_edge_maximal(sub.graph, k).verdict != Verdict::kMaximal) {
          c.status = ClauseStatus::kFail;
          c.witnesses.push_back(side);
        }
      }
      c.detail = std::to_string(parts.size()) + " components of H - X with |X| = " +
                 std::to_string(kappa.value) + ", " + std::to_string(checked) + " sides checked";
    }
    report.clauses.push_back(std::move(c));
  }

  {
    AuditClause c{"side-sizes", "sides with r <= size <= n-2 have t vertices if complete, >= t+1 otherwise",
                  ClauseStatus::kSkipped, "", {}};
    if (!hypothesis) {
      c.detail = hypothesis_note;
    } else if (parts.size() > kMaxParts) {
      c.detail = std::to_string(parts.size()) + " components exceed the enumeration cap";
    } else {
      c.status = ClauseStatus::kPass;
      int applicable = 0;
      for (const VertexSet side : sides) {
        if (side.size() < r || side.size() > n - 2) continue;
        ++applicable;
        const bool complete = is_complete(induced(h, side).graph);
        const bool ok = complete ? side.size() == t : side.size() >= t + 1;
        if (!ok) {
          c.status = ClauseStatus::kFail;
          c.witnesses.push_back(side);
        }
      }
      c.detail = std::to_string(applicable) + " sides in range";
    }
    report.clauses.push_back(std::move(c));
  }
  return report;
}

std::string audit_text(const AuditReport& report) {
  std::string out;
  for (const auto& c : report.clauses) {
    out += c.id + ": " + std::string(to_string(c.status)) + " -- " + c.claim;
    if (!c.detail.empty()) out += " [" + c.detail + "]";
    out += '\n';
    if (c.status == ClauseStatus::kFail) {
      for (const VertexSet w : c.witnesses) out += "  witness {" + format_set(w) + "}\n";
    }
  }
  return out;
}

std::string audit_json(const AuditReport& report, int indent) { return detail::to_json(report).dump(indent); }

std::optional<std::vector<Vertex>> m_family_peeling(const Hypergraph& h, std::int64_t k) {
  const int r = h.uniformity();
  const int t = threshold_t(k, r);
  if (h.num_vertices() < t) return std::nullopt;

  VertexSet current = h.vertices();
  std::vector<Vertex> order;
  while (current.size() > t) {
    bool removed = false;
    for (const Vertex v : current) {
      const std::int64_t d = std::count_if(h.edges().begin(), h.edges().end(),
                                           [&](Edge e) { return e.contains(v) && e.is_subset_of(current); });
      if (d != k) continue;
      const VertexSet rest = current.without(v);
      if (components(rest, edges_within(h, rest)).size() != 1) continue;
      current = rest;
      order.push_back(v);
      removed = true;
      break;
    }
    if (!removed) return std::nullopt;
  }
  if (static_cast<std::int64_t>(edges_within(h, current).size()) != binom(t, r)) return std::nullopt;
  return order;
}

bool is_m_family_member(const Hypergraph& h, std::int64_t k) { return m_family_peeling(h, k).has_value(); }

}  // namespace hypermax
