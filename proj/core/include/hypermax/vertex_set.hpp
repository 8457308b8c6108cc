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

#ifndef HYPERMAX_VERTEX_SET_HPP_
#define HYPERMAX_VERTEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace hypermax {

using Vertex = int;

// A set of vertices drawn from [0, 64), stored as a bitmask. Used both for
// hyperedges and for cut sides.
//
// Ordering is the lexicographic order of the increasing vertex sequences, so
// sorting a vector of VertexSet yields the canonical edge order.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  static constexpr VertexSet from_mask(std::uint64_t mask) { return VertexSet(mask); }

  // Throws InvalidArgument if any vertex lies outside [0, 64).
  static VertexSet of(std::initializer_list<Vertex> vertices);
  static VertexSet of(std::span<const Vertex> vertices);

  // {lo, lo+1, ..., hi-1}.
  static VertexSet range(Vertex lo, Vertex hi);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(Vertex v) const {
    return v >= 0 && v < kCapacity && ((mask_ >> v) & 1U) != 0;
  }
  constexpr bool intersects(VertexSet other) const { return (mask_ & other.mask_) != 0; }
  constexpr bool is_subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
  // Smallest member; the set must be nonempty.
  constexpr Vertex front() const { return std::countr_zero(mask_); }
  // Largest member; the set must be nonempty.
  constexpr Vertex back() const { return 63 - std::countl_zero(mask_); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(mask_ | bit(v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(mask_ & ~bit(v)); }

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // Lexicographic comparison of the sorted member sequences. At the lowest
  // differing bit p the set holding p continues with p, the other continues
  // with something larger or stops (and is then a proper prefix).
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    const int p = std::countr_zero(diff);
    const std::uint64_t above = p == 63 ? 0 : ~((std::uint64_t{2} << p) - 1);
    if ((a.mask_ >> p) & 1U) {
      return (b.mask_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (a.mask_ & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  std::uint64_t mask_ = 0;
};

using Edge = VertexSet;

// All r-subsets of [0, n) in lexicographic order, as a forward range.
class Combinations {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexSet;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexSet*;
    using reference = VertexSet;

    iterator() = default;
    iterator(int n, int r, bool done);
    VertexSet operator*() const { return current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    int n_ = 0;
    int r_ = 0;
    std::vector<Vertex> index_;
    VertexSet current_;
    bool done_ = true;
  };

  // Requires 0 <= n <= 64 and r >= 0. Empty when r > n.
  Combinations(int n, int r);
  iterator begin() const { return iterator(n_, r_, false); }
  iterator end() const { return iterator(n_, r_, true); }

 private:
  int n_;
  int r_;
};

// Every r-subset of `pool` (in lexicographic order of the actual vertices).
std::vector<VertexSet> subsets_of_size(VertexSet pool, int r);

}  // namespace hypermax

#endif  // HYPERMAX_VERTEX_SET_HPP_
