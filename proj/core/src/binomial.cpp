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

#include "hypermax/binomial.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "hypermax/errors.hpp"

namespace hypermax {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::optional<std::int64_t> try_binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return std::nullopt;
  if (k > n) return 0;
  k = std::min(k, n - k);
  // After step i the accumulator holds C(n-k+i, i), always an integer.
  // Dividing out the gcd first keeps the intermediate product small.
  std::int64_t acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    std::int64_t num = n - k + i;
    std::int64_t den = i;
    const std::int64_t g = std::gcd(acc, den);
    acc /= g;
    den /= g;
    num /= den;  // den divides num once gcd(acc, den) == 1
    if (__builtin_mul_overflow(acc, num, &acc)) return std::nullopt;
  }
  return acc;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    throw InvalidArgument("binom requires n >= 0 and k >= 0, got (" + std::to_string(n) + ", " +
                          std::to_string(k) + ")");
  }
  const auto value = try_binom(n, k);
  if (!value) {
    throw OverflowError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") does not fit in a signed 64-bit integer");
  }
  return *value;
}

int threshold_t(std::int64_t k, int r) {
  if (k < 1) throw InvalidArgument("threshold_t requires k >= 1, got " + std::to_string(k));
  if (r < 2) throw InvalidArgument("threshold_t requires r >= 2, got " + std::to_string(r));
  // t is the least t >= r with C(t, r-1) > k, since C(r-1, r-1) = 1 <= k.
  // C(t, r-1) grows with t, so gallop then bisect. Overflow counts as > k.
  const auto exceeds = [&](int t) {
    const auto value = try_binom(t, r - 1);
    return !value || *value > k;
  };
  int lo = r - 1;
  int hi = r;
  while (!exceeds(hi)) {
    if (hi > std::numeric_limits<int>::max() / 2) {
      throw OverflowError("t(k, r) exceeds int range for k = " + std::to_string(k) + ", r = " + std::to_string(r));
    }
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (exceeds(mid) ? hi : lo) = mid;
  }
  return hi;
}

bool core_size_hypothesis(int n, std::int64_t k, int r) {
  const int t = threshold_t(k, r);
  return binom(t - 1, r - 1) == k ? n >= t : n >= t + 1;
}

Params Params::make(int n, std::int64_t k, int r) {
  if (n < 0) throw InvalidArgument("n >= 0 violated: n = " + std::to_string(n));
  Params p;
  p.n = n;
  p.k = k;
  p.r = r;
  p.t = threshold_t(k, r);
  return p;
}

}  // namespace hypermax
