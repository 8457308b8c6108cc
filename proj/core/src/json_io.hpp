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

#ifndef HYPERMAX_SRC_JSON_IO_HPP_
#define HYPERMAX_SRC_JSON_IO_HPP_

#include <json.hpp>

#include "hypermax/connectivity.hpp"
#include "hypermax/extremal.hpp"
#include "hypermax/io.hpp"
#include "hypermax/search.hpp"
#include "hypermax/strength.hpp"

namespace hypermax::detail {

using Json = nlohmann::ordered_json;

inline Json to_json(VertexSet s) { return Json(s.to_vector()); }

inline Json to_json(const Cut& cut) {
  Json crossing = Json::array();
  for (const Edge e : cut.crossing) crossing.push_back(to_json(e));
  return Json{{"side", to_json(cut.side)}, {"weight", cut.weight()}, {"crossing", std::move(crossing)}};
}

inline Json to_json(const StrengthNode& node) {
  Json children = Json::array();
  for (const auto& child : node.children) children.push_back(to_json(child));
  return Json{{"vertices", to_json(node.vertices)},
              {"kappa", node.kappa},
              {"strength", node.strength},
              {"cut", node.cut ? to_json(*node.cut) : Json(nullptr)},
              {"children", std::move(children)}};
}

inline Json to_json(const MaximalityReport& r) {
  return Json{{"verdict", std::string(to_string(r.verdict))},
              {"k", r.k},
              {"strength_value", r.strength_value},
              {"witness_subset", r.dense_subset ? to_json(*r.dense_subset) : Json(nullptr)},
              {"witness_subset_kappa", r.dense_subset ? Json(r.dense_subset_kappa) : Json(nullptr)},
              {"witness_non_edge", r.addable_edge ? to_json(*r.addable_edge) : Json(nullptr)},
              {"non_edges_checked", r.non_edges_checked}};
}

inline Json to_json(const Params& p) { return Json{{"n", p.n}, {"k", p.k}, {"r", p.r}, {"t", p.t}}; }

inline Json to_json(const AuditReport& report) {
  Json clauses = Json::array();
  for (const auto& c : report.clauses) {
    Json witnesses = Json::array();
    for (const VertexSet w : c.witnesses) witnesses.push_back(to_json(w));
    clauses.push_back(Json{{"id", c.id},
                           {"claim", c.claim},
                           {"status", std::string(to_string(c.status))},
                           {"detail", c.detail},
                           {"witnesses", std::move(witnesses)}});
  }
  return Json{{"params", to_json(report.params)}, {"edges", report.num_edges}, {"clauses", std::move(clauses)}};
}

inline Json to_json(const SearchSummary& s) {
  Json histogram = Json::object();
  for (const auto& [size, freq] : s.histogram) histogram[std::to_string(size)] = freq;
  Json examples = Json::object();
  for (const auto& [size, h] : s.examples) examples[std::to_string(size)] = to_text(h);
  const auto opt = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"params", to_json(s.params)},
              {"candidates", s.candidates},
              {"certified", s.certified},
              {"count", s.count},
              {"histogram", std::move(histogram)},
              {"min_size", opt(s.min_size)},
              {"max_size", opt(s.max_size)},
              {"lower_bound", s.lower},
              {"upper_bound", s.upper},
              {"pruning", s.pruning},
              {"examples", std::move(examples)}};
}

}  // namespace hypermax::detail

#endif  // HYPERMAX_SRC_JSON_IO_HPP_
