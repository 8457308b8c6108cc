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

#ifndef HYPERMAX_IO_HPP_
#define HYPERMAX_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "hypermax/hypergraph.hpp"

namespace hypermax {

// Canonical text form:
//
//   n r m
//   a_1 b_1 ...    (m lines, r increasing ids each, lexicographic order)
//
// Equal hypergraphs serialize to identical bytes.
std::string to_text(const Hypergraph& h);

// Accepts the canonical form. Lines whose first non-blank character is '#'
// and blank lines are skipped. Edge lines may come in any order but each
// must list r strictly increasing ids. Throws ParseError with a line number.
Hypergraph parse_hypergraph(std::string_view text);

Hypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h);

// Space-separated member list, e.g. "0 1 4".
std::string format_set(VertexSet s);

}  // namespace hypermax

#endif  // HYPERMAX_IO_HPP_
