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

#include <functional>
#include <optional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qfock/fock/degree_meta.hpp"
#include "qfock/fock/realization.hpp"

namespace qfock {

/// max_raise component of an operator with no entries in that mode.
inline constexpr int kNoRaise = std::numeric_limits<int>::min() / 4;
/// min_shift component of an operator with no entries in that mode.
inline constexpr int kNoLower = -kNoRaise;

using DegreeRange = std::pair<int, int>;

template <class F>
struct Entry {
  StateIndex target;
  F value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Column-sparse linear map on a truncated Fock space.
///
/// Invariants: every column is sorted by target with distinct targets and no
/// zero values; max_raise[k] bounds the occupation increase of mode k over
/// every monomial the operator was built from; a column is tainted whenever
/// truncation dropped amplitude from it at any construction step, so
/// untainted columns equal the corresponding columns of the untruncated
/// operator; meta bounds the t-degree of every entry. min_shift[k] bounds
/// the occupation change of mode k from below, and column_range(s) bounds
/// the numerator exponents (over meta.den) of every entry of column s. Both
/// are derived from construction, never from entry values, so they also
/// hold for the untruncated operator on untainted columns.
template <class F>
class SparseOperator {
 public:
  using Column = std::vector<Entry<F>>;

  /// The zero operator.
  explicit SparseOperator(ModeConfig config);
  /// Sorts columns, merges repeated targets and drops zeros. `tainted` may be
  /// empty (nothing tainted).
  SparseOperator(ModeConfig config, std::vector<Column> columns,
                 std::vector<char> tainted, std::vector<int> max_raise,
                 DegreeMeta meta);
  /// As above with an explicit lower shift bound and per-column ranges
  /// (empty means every column uses meta.range). Without them min_shift is
  /// -cutoff in every mode.
  SparseOperator(ModeConfig config, std::vector<Column> columns,
                 std::vector<char> tainted, std::vector<int> max_raise,
                 DegreeMeta meta, std::vector<int> min_shift,
                 std::vector<std::optional<DegreeRange>> column_ranges);

  const ModeConfig& config() const { return config_; }
  const Column& column(StateIndex s) const { return columns_[s]; }
  bool tainted(StateIndex s) const { return !tainted_.empty() && tainted_[s]; }
  std::size_t tainted_count() const;
  const std::vector<int>& max_raise() const { return max_raise_; }
  const DegreeMeta& meta() const { return meta_; }
  const std::vector<int>& min_shift() const { return min_shift_; }
  std::optional<DegreeRange> column_range(StateIndex s) const {
    return ranges_.empty() ? meta_.range : ranges_[s];
  }
  std::size_t nonzeros() const;
  /// Entry at (target, source), zero if absent.
  F entry(StateIndex target, StateIndex source) const;

  SparseOperator operator-() const;
  /// value * this; `exact` is the Scalar that value realizes, for the meta.
  SparseOperator scaled(const F& value, const Scalar& exact) const;

  template <class G>
  friend SparseOperator<G> compose(const SparseOperator<G>& a,
                                   const SparseOperator<G>& b);
  template <class G>
  friend SparseOperator<G> operator+(const SparseOperator<G>& a,
                                     const SparseOperator<G>& b);

  /// Structural equality of entries only (taint and metadata ignored).
  bool same_entries(const SparseOperator& other) const {
    return config_ == other.config_ && columns_ == other.columns_;
  }

 private:
  SparseOperator(ModeConfig config, std::vector<Column> columns,
                 std::vector<char> tainted, std::vector<int> max_raise,
                 DegreeMeta meta, std::vector<int> min_shift,
                 std::vector<std::optional<DegreeRange>> column_ranges, bool canonical);

  ModeConfig config_;
  std::vector<Column> columns_;
  std::vector<char> tainted_;
  std::vector<int> max_raise_;
  DegreeMeta meta_;
  std::vector<int> min_shift_;
  std::vector<std::optional<DegreeRange>> ranges_;
};

template <class F>
SparseOperator<F> compose(const SparseOperator<F>& a, const SparseOperator<F>& b);
template <class F>
SparseOperator<F> operator+(const SparseOperator<F>& a, const SparseOperator<F>& b);
template <class F>
SparseOperator<F> operator-(const SparseOperator<F>& a, const SparseOperator<F>& b) {
  return a + (-b);
}
template <class F>
SparseOperator<F> operator*(const SparseOperator<F>& a, const SparseOperator<F>& b) {
  return compose(a, b);
}

template <class F>
SparseOperator<F> identity(const Realization<F>& r);
template <class F>
SparseOperator<F> zero(const Realization<F>& r);
/// A_mode^+ |n> = |n + e_mode>; columns with n_mode = N are tainted.
template <class F>
SparseOperator<F> osc_plus(const Realization<F>& r, int mode);
/// A_mode^- |n> = (n_mode)_q |n - e_mode>.
template <class F>
SparseOperator<F> osc_minus(const Realization<F>& r, int mode);
/// Diagonal t^(sum_k a_k n_k + c); a has one entry per mode.
template <class F>
SparseOperator<F> diag_exp(const Realization<F>& r, std::span<const int> a, int c);
/// Diagonal with entry f(occupations) on every state.
template <class F>
SparseOperator<F> diag_poly(
    const Realization<F>& r,
    const std::function<Scalar(std::span<const std::uint8_t>)>& f);
/// s * A.
template <class F>
SparseOperator<F> scale(const Realization<F>& r, const Scalar& s,
                        const SparseOperator<F>& a);

/// AB - BA.
template <class F>
SparseOperator<F> commutator(const SparseOperator<F>& a, const SparseOperator<F>& b);
/// AB + BA.
template <class F>
SparseOperator<F> anticommutator(const SparseOperator<F>& a,
                                 const SparseOperator<F>& b);
/// q^e AB - q^-e BA; throws DomainError unless 4e is an integer.
template <class F>
SparseOperator<F> q_commutator(const Realization<F>& r, const SparseOperator<F>& a,
                               const SparseOperator<F>& b, const Rational& e);
/// A^k for k >= 0; throws DomainError for negative k.
template <class F>
SparseOperator<F> power(const Realization<F>& r, const SparseOperator<F>& a, int k);

/// Deterministic listing of the nonzero columns in basis order, one per
/// line: "|1,0> -> t^4 |0,1> + 2 |1,0>". Tainted columns carry a trailing
/// " [tainted]" marker.
template <class F>
std::string render(const SparseOperator<F>& a);
/// "t^8 |2>" style rendering of the image of one basis state; "0" if empty.
template <class F>
std::string render_column(const SparseOperator<F>& a, StateIndex s);

#define QFOCK_FOCK_EXTERN(F)                                                   \
  extern template class SparseOperator<F>;                                     \
  extern template SparseOperator<F> compose(const SparseOperator<F>&,          \
                                            const SparseOperator<F>&);         \
  extern template SparseOperator<F> operator+(const SparseOperator<F>&,        \
                                              const SparseOperator<F>&);       \
  extern template SparseOperator<F> identity(const Realization<F>&);           \
  extern template SparseOperator<F> zero(const Realization<F>&);               \
  extern template SparseOperator<F> osc_plus(const Realization<F>&, int);      \
  extern template SparseOperator<F> osc_minus(const Realization<F>&, int);     \
  extern template SparseOperator<F> diag_exp(const Realization<F>&,            \
                                             std::span<const int>, int);       \
  extern template SparseOperator<F> diag_poly(                                 \
      const Realization<F>&,                                                   \
      const std::function<Scalar(std::span<const std::uint8_t>)>&);            \
  extern template SparseOperator<F> scale(const Realization<F>&, const Scalar&, \
                                          const SparseOperator<F>&);           \
  extern template SparseOperator<F> commutator(const SparseOperator<F>&,       \
                                               const SparseOperator<F>&);      \
  extern template SparseOperator<F> anticommutator(const SparseOperator<F>&,   \
                                                   const SparseOperator<F>&);  \
  extern template SparseOperator<F> q_commutator(                              \
      const Realization<F>&, const SparseOperator<F>&,                         \
      const SparseOperator<F>&, const Rational&);                              \
  extern template SparseOperator<F> power(const Realization<F>&,               \
                                          const SparseOperator<F>&, int);      \
  extern template std::string render(const SparseOperator<F>&);                \
  extern template std::string render_column(const SparseOperator<F>&,          \
                                            StateIndex);

QFOCK_FOCK_EXTERN(Scalar)
QFOCK_FOCK_EXTERN(GaussianRational)
#undef QFOCK_FOCK_EXTERN

}  // namespace qfock
