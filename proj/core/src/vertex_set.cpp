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

#include "hypermax/vertex_set.hpp"

#include <string>

#include "hypermax/errors.hpp"

namespace hypermax {

VertexSet VertexSet::of(std::initializer_list<Vertex> vertices) {
  return of(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

VertexSet VertexSet::of(std::span<const Vertex> vertices) {
  std::uint64_t mask = 0;
  for (const Vertex v : vertices) {
    if (v < 0 || v >= kCapacity) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside [0, 64)");
    }
    mask |= bit(v);
  }
  return VertexSet(mask);
}

VertexSet VertexSet::range(Vertex lo, Vertex hi) {
  if (lo < 0 || hi > kCapacity || lo > hi) {
    throw InvalidArgument("invalid vertex range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + ")");
  }
  if (lo == hi) return VertexSet();
  const std::uint64_t upto_hi = hi == kCapacity ? ~std::uint64_t{0} : (bit(hi) - 1);
  return VertexSet(upto_hi & ~(bit(lo) - 1));
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const Vertex v : *this) out.push_back(v);
  return out;
}

Combinations::Combinations(int n, int r) : n_(n), r_(r) {
  if (n < 0 || n > VertexSet::kCapacity || r < 0) {
    throw InvalidArgument("Combinations requires 0 <= n <= 64 and r >= 0");
  }
}

Combinations::iterator::iterator(int n, int r, bool done) : n_(n), r_(r), done_(done) {
  if (done_) return;
  if (r_ > n_) {
    done_ = true;
    return;
  }
  index_.resize(static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i) index_[static_cast<std::size_t>(i)] = i;
  current_ = VertexSet::range(0, r_);
}

Combinations::iterator& Combinations::iterator::operator++() {
  // Rightmost position that can still advance.
  int i = r_ - 1;
  while (i >= 0 && index_[static_cast<std::size_t>(i)] == n_ - r_ + i) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  ++index_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r_; ++j) {
    index_[static_cast<std::size_t>(j)] = index_[static_cast<std::size_t>(j - 1)] + 1;
  }
  current_ = VertexSet::of(index_);
  return *this;
}

std::vector<VertexSet> subsets_of_size(VertexSet pool, int r) {
  const std::vector<Vertex> members = pool.to_vector();
  std::vector<VertexSet> out;
  for (const VertexSet local : Combinations(static_cast<int>(members.size()), r)) {
    std::uint64_t mask = 0;
    for (const Vertex i : local) mask |= std::uint64_t{1} << members[static_cast<std::size_t>(i)];
    out.push_back(VertexSet::from_mask(mask));
  }
  return out;
}

}  // namespace hypermax
