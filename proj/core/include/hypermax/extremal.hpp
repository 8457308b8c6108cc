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

#ifndef HYPERMAX_EXTREMAL_HPP_
#define HYPERMAX_EXTREMAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermax/binomial.hpp"
#include "hypermax/hypergraph.hpp"

namespace hypermax {

// C(t, r) + (n - t) k, the largest size of a k-edge-maximal r-uniform
// hypergraph on n >= t vertices. Requires k >= 2, r >= 2, n >= t(k, r).
std::int64_t upper_bound(int n, std::int64_t k, int r);

// (n - 1) k - ((t - 1) k - C(t, r)) floor(n / t), the smallest such size.
// Same requirements as upper_bound.
std::int64_t lower_bound(int n, std::int64_t k, int r);

enum class Verdict { kMaximal, kStrengthExceedsK, kAddableNonEdge };

std::string_view to_string(Verdict verdict);

struct MaximalityReport {
  Verdict verdict = Verdict::kMaximal;
  std::int64_t k = 0;
  std::int64_t strength_value = 0;
  // Set for kStrengthExceedsK: a vertex subset S whose induced kappa' > k.
  std::optional<VertexSet> dense_subset;
  std::int64_t dense_subset_kappa = 0;
  // Set for kAddableNonEdge: a non-edge e whose addition keeps strength <= k.
  std::optional<Edge> addable_edge;
  // Non-edges examined before the verdict was reached.
  std::int64_t non_edges_checked = 0;
};

struct MaximalityOptions {
  // Worker threads for the per-non-edge checks. The report does not depend
  // on this value.
  int jobs = 1;
};

// Certifies k-edge-maximality: strength(H) <= k, and H + e has a
// subhypergraph with kappa' >= k+1 for every non-edge e. A strength
// violation is reported before any addable non-edge; non-edges are scanned
// in lexicographic order. Requires k >= 1 and |V| >= r.
MaximalityReport is_k_edge_maximal(const Hypergraph& h, std::int64_t k, const MaximalityOptions& options = {});

// Re-checks the report's witness against the definition it claims to
// violate. Always true for kMaximal.
bool witness_holds(const Hypergraph& h, const MaximalityReport& report);

std::string report_text(const MaximalityReport& report);
std::string report_json(const MaximalityReport& report, int indent = 2);

enum class ClauseStatus { kPass, kFail, kSkipped };

std::string_view to_string(ClauseStatus status);

struct AuditClause {
  std::string id;
  std::string claim;
  ClauseStatus status = ClauseStatus::kSkipped;
  std::string detail;
  // Vertex subsets that falsify the claim (failures), or the sides examined.
  std::vector<VertexSet> witnesses;
};

struct AuditReport {
  Params params;
  std::int64_t num_edges = 0;
  std::vector<AuditClause> clauses;

  bool any_failed() const;
  const AuditClause* find(std::string_view id) const;
};

// Structural audit of a hypergraph already certified k-edge-maximal:
//   connectivity  kappa'(H) = strength(H) = k          (needs the n-range hypothesis)
//   size-bounds   lower_bound <= |E| <= upper_bound     (needs n >= t)
//   sides-maximal every union of some but not all components of H - X,
//                 X a minimum cut, induces a k-edge-maximal hypergraph
//   side-sizes    such a side with r <= size <= n-2 has exactly t vertices
//                 when complete and at least t+1 otherwise (needs the hypothesis)
// Clauses whose hypotheses fail are kSkipped. Requires k >= 2.
AuditReport audit_maximal(const Hypergraph& h, std::int64_t k);

std::string audit_text(const AuditReport& report);
std::string audit_json(const AuditReport& report, int indent = 2);

// Peels vertices of degree exactly k whose removal keeps the rest connected,
// smallest id first, until t vertices remain; succeeds if they span K_t^r.
// Returns the removal order (the reverse of a build order for M(n; k, r)).
std::optional<std::vector<Vertex>> m_family_peeling(const Hypergraph& h, std::int64_t k);
bool is_m_family_member(const Hypergraph& h, std::int64_t k);

}  // namespace hypermax

#endif  // HYPERMAX_EXTREMAL_HPP_
