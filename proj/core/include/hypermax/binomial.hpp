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

#ifndef HYPERMAX_BINOMIAL_HPP_
#define HYPERMAX_BINOMIAL_HPP_

#include <cstdint>
#include <optional>

namespace hypermax {

// Checked helpers. Each throws OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Exact binomial coefficient C(n, k), with C(n, k) = 0 whenever k > n.
// Returns nullopt when the value does not fit in std::int64_t.
std::optional<std::int64_t> try_binom(std::int64_t n, std::int64_t k);

// As try_binom, but throws OverflowError on overflow and InvalidArgument
// for negative arguments.
std::int64_t binom(std::int64_t n, std::int64_t k);

// The unique t with C(t-1, r-1) <= k < C(t, r-1). Requires k >= 1, r >= 2.
int threshold_t(std::int64_t k, int r);

// The n-range in which every k-edge-maximal hypergraph has
// kappa' = strength = k: n >= t if C(t-1, r-1) == k, and n >= t+1 otherwise.
bool core_size_hypothesis(int n, std::int64_t k, int r);

// (n, k, r) together with the derived threshold t.
struct Params {
  int n = 0;
  std::int64_t k = 0;
  int r = 0;
  int t = 0;

  // Validates k >= 1 and r >= 2 and fills in t.
  static Params make(int n, std::int64_t k, int r);

  friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace hypermax

#endif  // HYPERMAX_BINOMIAL_HPP_
