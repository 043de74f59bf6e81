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


#include "qfock/fock/degree_meta.hpp"

#include <algorithm>

namespace qfock {
namespace {

using Range = std::pair<int, int>;

std::optional<Range> hull(const std::optional<Range>& a,
                          const std::optional<Range>& b) {
  if (!a) return b;
  if (!b) return a;
  return Range{std::min(a->first, b->first), std::max(a->second, b->second)};
}

/// Range of P * (big / small) given the range of P.
std::optional<Range> widen(const std::optional<Range>& r, const LaurentPoly& big,
                           const LaurentPoly& small) {
  if (!r) return r;
  const int extra = big.high() - small.high();
  return Range{r->first, r->second + extra};
}

}  // namespace

std::optional<Range> range_hull(const std::optional<Range>& a, const std::optional<Range>& b) {
  return hull(a, b);
}

std::optional<Range> range_widen(const std::optional<Range>& r, const LaurentPoly& big,
                                 const LaurentPoly& small) {
  return widen(r, big, small);
}

std::optional<Range> entry_range(const Scalar& v, const LaurentPoly& den) {
  if (v.is_zero()) return std::nullopt;
  return widen(Range{v.num().low(), v.num().high()}, den, v.den());
}

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  const LaurentPoly x = a.shifted(-a.low()).monic();
  const LaurentPoly y = b.shifted(-b.low()).monic();
  if (x == y || y.is_one()) return x;
  if (x.is_one()) return y;
  const LaurentPoly g = LaurentPoly::gcd(x, y);
  return g.is_one() ? x * y : x * LaurentPoly::exact_div(y, g);
}

DegreeMeta DegreeMeta::of(const std::vector<Scalar>& entries) {
  struct Group {
    LaurentPoly den;
    Range range;
  };
  std::vector<Group> groups;
  for (const Scalar& s : entries) {
    if (s.is_zero()) continue;
    const Range r{s.num().low(), s.num().high()};
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.den == s.den(); });
    if (it == groups.end()) {
      groups.push_back({s.den(), r});
    } else {
      it->range = {std::min(it->range.first, r.first),
                   std::max(it->range.second, r.second)};
    }
  }
  DegreeMeta m;
  for (const Group& g : groups) m.den = poly_lcm(m.den, g.den);
  for (const Group& g : groups) m.range = hull(m.range, widen(g.range, m.den, g.den));
  return m;
}

DegreeMeta DegreeMeta::product(const DegreeMeta& a, const DegreeMeta& b) {
  if (!a.range || !b.range) return zero();
  DegreeMeta m;
  m.range = Range{a.range->first + b.range->first,
                  a.range->second + b.range->second};
  m.den = a.den * b.den;
  return m;
}

DegreeMeta DegreeMeta::sum(const DegreeMeta& a, const DegreeMeta& b) {
  if (!a.range) return b;
  if (!b.range) return a;
  DegreeMeta m;
  m.den = poly_lcm(a.den, b.den);
  m.range = hull(widen(a.range, m.den, a.den), widen(b.range, m.den, b.den));
  return m;
}

}  // namespace qfock
