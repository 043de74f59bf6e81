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
#include <string>
#include <vector>

#include "qfock/fock/sparse_operator.hpp"

namespace qfock {

enum class Outcome { pass, fail, inconclusive };

std::string to_string(Outcome o);

/// Interior margin: automatic (from max_raise) or a fixed per-mode value.
struct Margin {
  std::optional<int> fixed;

  static Margin automatic() { return {}; }
  static Margin of(int n) { return {n}; }
  bool is_auto() const { return !fixed; }
  /// "auto" or the decimal value.
  std::string to_string() const;
};

/// Per-mode margin: the fixed value, or the componentwise max of both
/// max_raise vectors clamped at zero. Throws DomainError on a negative value.
std::vector<int> resolve_margin(const Margin& m, const std::vector<int>& a_raise,
                                const std::vector<int>& b_raise);

/// True if every n_k <= N - margin_k.
bool in_interior(const ModeConfig& cfg, StateIndex s, const std::vector<int>& margin);

template <class F>
struct Witness {
  StateIndex state;
  StateIndex target;
  F lhs;
  F rhs;
};

template <class F>
struct InteriorComparison {
  Outcome outcome = Outcome::inconclusive;
  std::size_t columns_compared = 0;
  std::vector<int> margin;
  std::optional<Witness<F>> witness;
};

/// Compares a and b column by column on interior states that neither side
/// taints. The first differing entry in basis order is reported as witness.
/// With no comparable column the outcome is inconclusive.
template <class F>
InteriorComparison<F> equal_on_interior(const SparseOperator<F>& a,
                                        const SparseOperator<F>& b,
                                        const Margin& margin);

/// First target where the two columns differ, if any.
template <class F>
std::optional<Witness<F>> column_difference(const SparseOperator<F>& a,
                                            const SparseOperator<F>& b,
                                            StateIndex s);

extern template InteriorComparison<Scalar> equal_on_interior(
    const SparseOperator<Scalar>&, const SparseOperator<Scalar>&, const Margin&);
extern template InteriorComparison<GaussianRational> equal_on_interior(
    const SparseOperator<GaussianRational>&,
    const SparseOperator<GaussianRational>&, const Margin&);
extern template std::optional<Witness<Scalar>> column_difference(
    const SparseOperator<Scalar>&, const SparseOperator<Scalar>&, StateIndex);
extern template std::optional<Witness<GaussianRational>> column_difference(
    const SparseOperator<GaussianRational>&,
    const SparseOperator<GaussianRational>&, StateIndex);

}  // namespace qfock
