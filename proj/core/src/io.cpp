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

#include "hypermax/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "hypermax/errors.hpp"

namespace hypermax {

namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' &&
                              *ptr != '\r')) {
      throw ParseError(line_no, "expected an integer in '" + std::string(line) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

std::string to_text(const Hypergraph& h) {
  std::string out = std::to_string(h.num_vertices()) + " " + std::to_string(h.uniformity()) + " " +
                    std::to_string(h.num_edges()) + "\n";
  for (const Edge e : h.edges()) {
    out += format_set(e);
    out += '\n';
  }
  return out;
}

std::string format_set(VertexSet s) {
  std::string out;
  for (const Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long r = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  int header_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (skippable(line)) continue;

    const auto values = parse_ints(line, line_no);
    if (!have_header) {
      if (values.size() != 3) throw ParseError(line_no, "header must be 'n r m'");
      n = values[0];
      r = values[1];
      m = values[2];
      if (n < 0 || n > Hypergraph::kMaxVertices) throw ParseError(line_no, "n must lie in [0, 64]");
      if (r < 2) throw ParseError(line_no, "r must be at least 2");
      if (m < 0) throw ParseError(line_no, "m must be non-negative");
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));
    }
    if (static_cast<long long>(values.size()) != r) {
      throw ParseError(line_no, "edge must list exactly r = " + std::to_string(r) + " vertices");
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0 || values[i] >= n) {
        throw ParseError(line_no, "vertex " + std::to_string(values[i]) + " outside [0, " +
                                      std::to_string(n) + ")");
      }
      if (i > 0 && values[i] <= values[i - 1]) {
        throw ParseError(line_no, "edge vertices must be strictly increasing");
      }
      mask |= std::uint64_t{1} << values[i];
    }
    const Edge e = VertexSet::from_mask(mask);
    if (!seen.insert(e.mask()).second) throw ParseError(line_no, "repeated edge " + format_set(e));
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(0, "missing header line 'n r m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(header_line, "header announces m = " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << to_text(h);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace hypermax
