/*
 * Copyright 2026 The qfock Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <optional>
#include <utility>

#include "qfock/scalar/scalar.hpp"

namespace qfock {

/// Conservative description of the t-degree of every entry of an operator.
///
/// Invariant: each stored entry equals P / den for a Laurent polynomial P
/// whose exponents lie in `range` (no range means every entry is zero).
/// `den` has lowest exponent 0 and is monic. The bound is maintained
/// structurally, so it holds without inspecting the entries.
struct DegreeMeta {
  std::optional<std::pair<int, int>> range;
  LaurentPoly den = LaurentPoly(1);

  /// Meta of the zero operator.
  static DegreeMeta zero() { return {}; }
  /// Exact meta of a set of scalars.
  static DegreeMeta of(const std::vector<Scalar>& entries);
  static DegreeMeta of(const Scalar& entry) { return of(std::vector{entry}); }

  /// Bound for products x*y with x, y bounded by a and b.
  static DegreeMeta product(const DegreeMeta& a, const DegreeMeta& b);
  /// Bound for sums x+y with x, y bounded by a and b.
  static DegreeMeta sum(const DegreeMeta& a, const DegreeMeta& b);

  /// Number of distinct evaluation points at which an entry bounded by this
  /// meta must vanish to be identically zero: 1 + exponent span of P.
  int required_samples() const {
    return range ? range->second - range->first + 1 : 1;
  }

  friend bool operator==(const DegreeMeta&, const DegreeMeta&) = default;
};

/// Smallest range containing both; an absent range is empty.
std::optional<std::pair<int, int>> range_hull(const std::optional<std::pair<int, int>>& a,
                                              const std::optional<std::pair<int, int>>& b);

/// Range of P * (big / small) for P in r, where small divides big and both
/// have lowest exponent 0.
std::optional<std::pair<int, int>> range_widen(const std::optional<std::pair<int, int>>& r,
                                               const LaurentPoly& big,
                                               const LaurentPoly& small);

/// Exponent range of the numerator of v once written over `den`, which v's
/// denominator must divide.
std::optional<std::pair<int, int>> entry_range(const Scalar& v, const LaurentPoly& den);

/// Least common multiple of polynomial parts, monic with lowest exponent 0.
LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qfock
