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


#include "qfock/fock/sparse_operator.hpp"

#include <algorithm>
#include <map>

#include "qfock/error.hpp"

namespace qfock {
namespace {

using Ranges = std::vector<std::optional<DegreeRange>>;

int add_raise(int a, int b) {
  if (a == kNoRaise || b == kNoRaise) return kNoRaise;
  return std::max(kNoRaise, a + b);
}

int add_lower(int a, int b) {
  if (a == kNoLower || b == kNoLower) return kNoLower;
  return std::min(kNoLower, a + b);
}

std::optional<DegreeRange> shifted(const std::optional<DegreeRange>& r,
                                   const std::optional<DegreeRange>& by) {
  if (!r || !by) return std::nullopt;
  return DegreeRange{r->first + by->first, r->second + by->second};
}

/// out[s] = hull of r[t] over states t with lo_k <= t_k - s_k <= hi_k.
/// Separable, so one sliding pass per mode.
Ranges box_hull(const ModeConfig& cfg, Ranges r, const std::vector<int>& lo,
                const std::vector<int>& hi) {
  const int cutoff = cfg.cutoff();
  for (int k = 0; k < cfg.modes(); ++k) {
    const int a = std::max(lo[k], -cutoff);
    const int b = std::min(hi[k], cutoff);
    if (a == 0 && b == 0) continue;
    Ranges out(cfg.dim());
    const auto stride = static_cast<std::ptrdiff_t>(cfg.stride(k));
    for (std::size_t s = 0; s < cfg.dim(); ++s) {
      const int n = cfg.occ(static_cast<StateIndex>(s), k);
      for (int d = std::max(a, -n); d <= std::min(b, cutoff - n); ++d) {
        out[s] = range_hull(out[s], r[static_cast<std::size_t>(
                                        static_cast<std::ptrdiff_t>(s) + d * stride)]);
      }
    }
    r = std::move(out);
  }
  return r;
}

/// Sorts by target, sums repeated targets and drops zeros.
template <class F>
void canonicalize(std::vector<Entry<F>>& col) {
  if (col.size() > 1) {
    std::stable_sort(col.begin(), col.end(),
                     [](const Entry<F>& x, const Entry<F>& y) {
                       return x.target < y.target;
                     });
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < col.size();) {
    std::size_t j = i + 1;
    F sum = std::move(col[i].value);
    while (j < col.size() && col[j].target == col[i].target) {
      sum += col[j].value;
      ++j;
    }
    if (!sum.is_zero()) {
      col[out].target = col[i].target;
      col[out].value = std::move(sum);
      ++out;
    }
    i = j;
  }
  col.resize(out);
}

template <class F>
std::string term(const F& value, const std::string& state) {
  std::string c = value.to_string();
  if (c.find(' ') != std::string::npos) c = "(" + c + ")";
  return c + " " + state;
}

}  // namespace

template <class F>
SparseOperator<F>::SparseOperator(ModeConfig config)
    : config_(std::move(config)),
      columns_(config_.dim()),
      tainted_(config_.dim(), 0),
      max_raise_(config_.modes(), kNoRaise),
      min_shift_(config_.modes(), kNoLower) {}

template <class F>
SparseOperator<F>::SparseOperator(ModeConfig config, std::vector<Column> columns,
                                  std::vector<char> tainted,
                                  std::vector<int> max_raise, DegreeMeta meta)
    : SparseOperator(config, std::move(columns), std::move(tainted),
                     std::move(max_raise), std::move(meta),
                     std::vector<int>(config.modes(), -config.cutoff()), {}, false) {}

template <class F>
SparseOperator<F>::SparseOperator(ModeConfig config, std::vector<Column> columns,
                                  std::vector<char> tainted,
                                  std::vector<int> max_raise, DegreeMeta meta,
                                  std::vector<int> min_shift, Ranges column_ranges)
    : SparseOperator(std::move(config), std::move(columns), std::move(tainted),
                     std::move(max_raise), std::move(meta), std::move(min_shift),
                     std::move(column_ranges), false) {}

template <class F>
SparseOperator<F>::SparseOperator(ModeConfig config, std::vector<Column> columns,
                                  std::vector<char> tainted,
                                  std::vector<int> max_raise, DegreeMeta meta,
                                  std::vector<int> min_shift, Ranges column_ranges,
                                  bool canonical)
    : config_(std::move(config)),
      columns_(std::move(columns)),
      tainted_(std::move(tainted)),
      max_raise_(std::move(max_raise)),
      meta_(std::move(meta)),
      min_shift_(std::move(min_shift)),
      ranges_(std::move(column_ranges)) {
  const std::size_t dim = config_.dim();
  if (columns_.size() != dim) {
    throw ShapeError("column count differs from basis dimension");
  }
  if (tainted_.empty()) tainted_.assign(dim, 0);
  if (tainted_.size() != dim) {
    throw ShapeError("taint vector length differs from basis dimension");
  }
  if (static_cast<int>(max_raise_.size()) != config_.modes()) {
    throw ShapeError("max_raise length differs from mode count");
  }
  if (static_cast<int>(min_shift_.size()) != config_.modes()) {
    throw ShapeError("min_shift length differs from mode count");
  }
  if (!ranges_.empty() && ranges_.size() != dim) {
    throw ShapeError("column range count differs from basis dimension");
  }
  if (!canonical) {
    for (Column& col : columns_) {
      canonicalize(col);
      for (const Entry<F>& e : col) {
        if (e.target >= dim) throw IndexError("target state out of range");
      }
    }
  }
}

template <class F>
std::size_t SparseOperator<F>::tainted_count() const {
  return static_cast<std::size_t>(std::count(tainted_.begin(), tainted_.end(), 1));
}

template <class F>
std::size_t SparseOperator<F>::nonzeros() const {
  std::size_t n = 0;
  for (const Column& col : columns_) n += col.size();
  return n;
}

template <class F>
F SparseOperator<F>::entry(StateIndex target, StateIndex source) const {
  const Column& col = columns_.at(source);
  auto it = std::lower_bound(col.begin(), col.end(), target,
                             [](const Entry<F>& e, StateIndex t) {
                               return e.target < t;
                             });
  if (it != col.end() && it->target == target) return it->value;
  return F();
}

template <class F>
SparseOperator<F> SparseOperator<F>::operator-() const {
  SparseOperator out = *this;
  for (Column& col : out.columns_) {
    for (Entry<F>& e : col) e.value = -e.value;
  }
  return out;
}

template <class F>
SparseOperator<F> SparseOperator<F>::scaled(const F& value,
                                            const Scalar& exact) const {
  SparseOperator out = *this;
  if (value.is_zero()) {
    for (Column& col : out.columns_) col.clear();
    out.meta_ = DegreeMeta::zero();
    out.ranges_.clear();
    return out;
  }
  if (!value.is_one()) {
    for (Column& col : out.columns_) {
      for (Entry<F>& e : col) e.value = e.value * value;
    }
  }
  const DegreeMeta by = DegreeMeta::of(exact);
  out.meta_ = DegreeMeta::product(meta_, by);
  if (!ranges_.empty()) {
    for (auto& r : out.ranges_) r = shifted(r, by.range);
  }
  return out;
}

template <class F>
SparseOperator<F> compose(const SparseOperator<F>& a, const SparseOperator<F>& b) {
  require_same_config(a.config_, b.config_);
  using Column = typename SparseOperator<F>::Column;
  const std::size_t dim = a.config_.dim();
  std::vector<Column> cols(dim);
  std::vector<char> tainted(b.tainted_);
  for (std::size_t c = 0; c < dim; ++c) {
    Column& acc = cols[c];
    for (const Entry<F>& be : b.columns_[c]) {
      if (a.tainted_[be.target]) tainted[c] = 1;
      for (const Entry<F>& ae : a.columns_[be.target]) {
        acc.push_back({ae.target, ae.value * be.value});
      }
    }
    canonicalize(acc);
  }
  std::vector<int> raise(a.max_raise_.size());
  std::vector<int> lower(a.min_shift_.size());
  bool empty = false;
  for (std::size_t k = 0; k < raise.size(); ++k) {
    raise[k] = add_raise(a.max_raise_[k], b.max_raise_[k]);
    lower[k] = add_lower(a.min_shift_[k], b.min_shift_[k]);
    empty = empty || raise[k] == kNoRaise;
  }
  // Column c of AB draws on columns t of A for every t that column c of B
  // can reach, whether or not B's entry there happens to vanish.
  Ranges ranges(dim);
  if (!empty) {
    Ranges ra(dim);
    for (std::size_t t = 0; t < dim; ++t) ra[t] = a.column_range(static_cast<StateIndex>(t));
    ra = box_hull(a.config_, std::move(ra), b.min_shift_, b.max_raise_);
    for (std::size_t c = 0; c < dim; ++c) {
      ranges[c] = shifted(ra[c], b.column_range(static_cast<StateIndex>(c)));
    }
  }
  return SparseOperator<F>(a.config_, std::move(cols), std::move(tainted),
                           std::move(raise), DegreeMeta::product(a.meta_, b.meta_),
                           std::move(lower), std::move(ranges), true);
}

template <class F>
SparseOperator<F> operator+(const SparseOperator<F>& a, const SparseOperator<F>& b) {
  require_same_config(a.config_, b.config_);
  using Column = typename SparseOperator<F>::Column;
  const std::size_t dim = a.config_.dim();
  std::vector<Column> cols(dim);
  std::vector<char> tainted(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    tainted[c] = a.tainted_[c] | b.tainted_[c];
    const Column& x = a.columns_[c];
    const Column& y = b.columns_[c];
    Column& out = cols[c];
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].target < y[j].target)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].target < x[i].target) {
        out.push_back(y[j++]);
      } else {
        F sum = x[i].value + y[j].value;
        if (!sum.is_zero()) out.push_back({x[i].target, std::move(sum)});
        ++i;
        ++j;
      }
    }
  }
  std::vector<int> raise(a.max_raise_.size());
  std::vector<int> lower(a.min_shift_.size());
  for (std::size_t k = 0; k < raise.size(); ++k) {
    raise[k] = std::max(a.max_raise_[k], b.max_raise_[k]);
    lower[k] = std::min(a.min_shift_[k], b.min_shift_[k]);
  }
  DegreeMeta meta = DegreeMeta::sum(a.meta_, b.meta_);
  Ranges ranges(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const auto s = static_cast<StateIndex>(c);
    ranges[c] = range_hull(range_widen(a.column_range(s), meta.den, a.meta_.den),
                           range_widen(b.column_range(s), meta.den, b.meta_.den));
  }
  return SparseOperator<F>(a.config_, std::move(cols), std::move(tainted),
                           std::move(raise), std::move(meta), std::move(lower),
                           std::move(ranges), true);
}

template <class F>
SparseOperator<F> identity(const Realization<F>& r) {
  const ModeConfig& cfg = r.config();
  std::vector<typename SparseOperator<F>::Column> cols(cfg.dim());
  const F one = r.lift(Scalar(1));
  for (std::size_t s = 0; s < cfg.dim(); ++s) {
    cols[s].push_back({static_cast<StateIndex>(s), one});
  }
  return SparseOperator<F>(cfg, std::move(cols), {},
                           std::vector<int>(cfg.modes(), 0),
                           DegreeMeta::of(Scalar(1)), std::vector<int>(cfg.modes(), 0),
                           Ranges(cfg.dim(), DegreeRange{0, 0}));
}

template <class F>
SparseOperator<F> zero(const Realization<F>& r) {
  return SparseOperator<F>(r.config());
}

namespace {

template <class F>
SparseOperator<F> ladder(const Realization<F>& r, int mode, bool raise) {
  const ModeConfig& cfg = r.config();
  if (mode < 1 || mode > cfg.modes()) {
    throw IndexError("mode " + std::to_string(mode) + " outside 1.." +
                     std::to_string(cfg.modes()));
  }
  const int k = mode - 1;
  const int cutoff = cfg.cutoff();
  // Amplitude on |n> for each occupation n of the mode.
  std::vector<Scalar> exact(cutoff + 1);
  std::vector<F> lifted(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    exact[n] = raise ? Scalar(1) : qnum(n);
    lifted[n] = r.lift(exact[n]);
  }
  std::vector<typename SparseOperator<F>::Column> cols(cfg.dim());
  std::vector<char> tainted(cfg.dim(), 0);
  std::vector<Scalar> used;
  std::vector<Scalar> column_value(cfg.dim());
  for (std::size_t s = 0; s < cfg.dim(); ++s) {
    const int n = cfg.occ(static_cast<StateIndex>(s), k);
    if (raise && n == cutoff) {
      tainted[s] = 1;
      continue;
    }
    if (!raise && n == 0) continue;
    const StateIndex target = raise ? static_cast<StateIndex>(s) + cfg.stride(k)
                                    : static_cast<StateIndex>(s) - cfg.stride(k);
    if (r.gauged()) {
      const Rational g = r.gauge_ratio(target, static_cast<StateIndex>(s));
      cols[s].push_back({target, lifted[n] * r.lift(Scalar(g))});
      used.push_back(exact[n] * Scalar(g));
      column_value[s] = used.back();
    } else {
      cols[s].push_back({target, lifted[n]});
      column_value[s] = exact[n];
    }
  }
  if (!r.gauged()) {
    for (int n = raise ? 0 : 1; n <= (raise ? cutoff - 1 : cutoff); ++n) {
      used.push_back(exact[n]);
    }
  }
  std::vector<int> max_raise(cfg.modes(), 0);
  max_raise[k] = raise ? 1 : -1;
  DegreeMeta meta = DegreeMeta::of(used);
  Ranges ranges(cfg.dim());
  for (std::size_t s = 0; s < cfg.dim(); ++s) ranges[s] = entry_range(column_value[s], meta.den);
  return SparseOperator<F>(cfg, std::move(cols), std::move(tainted), max_raise,
                           std::move(meta), max_raise, std::move(ranges));
}

}  // namespace

template <class F>
SparseOperator<F> osc_plus(const Realization<F>& r, int mode) {
  return ladder(r, mode, true);
}

template <class F>
SparseOperator<F> osc_minus(const Realization<F>& r, int mode) {
  return ladder(r, mode, false);
}

template <class F>
SparseOperator<F> diag_exp(const Realization<F>& r, std::span<const int> a, int c) {
  const ModeConfig& cfg = r.config();
  if (static_cast<int>(a.size()) != cfg.modes()) {
    throw ShapeError("exponent vector length differs from mode count");
  }
  std::map<int, F> cache;
  std::vector<typename SparseOperator<F>::Column> cols(cfg.dim());
  int lo = 0, hi = 0;
  Ranges ranges(cfg.dim());
  for (std::size_t s = 0; s < cfg.dim(); ++s) {
    int e = c;
    const auto occ = cfg.occupations(static_cast<StateIndex>(s));
    for (int k = 0; k < cfg.modes(); ++k) e += a[k] * occ[k];
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, r.lift(Scalar::t_power(e))).first;
    cols[s].push_back({static_cast<StateIndex>(s), it->second});
    ranges[s] = DegreeRange{e, e};
    lo = s == 0 ? e : std::min(lo, e);
    hi = s == 0 ? e : std::max(hi, e);
  }
  DegreeMeta meta;
  meta.range = std::pair{lo, hi};
  return SparseOperator<F>(cfg, std::move(cols), {},
                           std::vector<int>(cfg.modes(), 0), std::move(meta),
                           std::vector<int>(cfg.modes(), 0), std::move(ranges));
}

template <class F>
SparseOperator<F> diag_poly(
    const Realization<F>& r,
    const std::function<Scalar(std::span<const std::uint8_t>)>& f) {
  const ModeConfig& cfg = r.config();
  std::vector<typename SparseOperator<F>::Column> cols(cfg.dim());
  std::vector<Scalar> values(cfg.dim());
  for (std::size_t s = 0; s < cfg.dim(); ++s) {
    values[s] = f(cfg.occupations(static_cast<StateIndex>(s)));
    if (!values[s].is_zero()) {
      cols[s].push_back({static_cast<StateIndex>(s), r.lift(values[s])});
    }
  }
  DegreeMeta meta = DegreeMeta::of(values);
  Ranges ranges(cfg.dim());
  for (std::size_t s = 0; s < cfg.dim(); ++s) ranges[s] = entry_range(values[s], meta.den);
  return SparseOperator<F>(cfg, std::move(cols), {},
                           std::vector<int>(cfg.modes(), 0), std::move(meta),
                           std::vector<int>(cfg.modes(), 0), std::move(ranges));
}

template <class F>
SparseOperator<F> scale(const Realization<F>& r, const Scalar& s,
                        const SparseOperator<F>& a) {
  require_same_config(r.config(), a.config());
  return a.scaled(r.lift(s), s);
}

template <class F>
SparseOperator<F> commutator(const SparseOperator<F>& a, const SparseOperator<F>& b) {
  return compose(a, b) - compose(b, a);
}

template <class F>
SparseOperator<F> anticommutator(const SparseOperator<F>& a,
                                 const SparseOperator<F>& b) {
  return compose(a, b) + compose(b, a);
}

template <class F>
SparseOperator<F> q_commutator(const Realization<F>& r, const SparseOperator<F>& a,
                               const SparseOperator<F>& b, const Rational& e) {
  if (e.is_zero()) return commutator(a, b);
  const Scalar up = q_power(e);
  const Scalar down = q_power(-e);
  return scale(r, up, compose(a, b)) - scale(r, down, compose(b, a));
}

template <class F>
SparseOperator<F> power(const Realization<F>& r, const SparseOperator<F>& a, int k) {
  if (k < 0) throw DomainError("operator power must be nonnegative");
  if (k == 0) return identity(r);
  SparseOperator<F> out = a;
  for (int i = 1; i < k; ++i) out = compose(out, a);
  return out;
}

template <class F>
std::string render_column(const SparseOperator<F>& a, StateIndex s) {
  const auto& col = a.column(s);
  if (col.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (i > 0) out += " + ";
    out += term(col[i].value, a.config().label(col[i].target));
  }
  return out;
}

template <class F>
std::string render(const SparseOperator<F>& a) {
  std::string out;
  const ModeConfig& cfg = a.config();
  for (std::size_t s = 0; s < cfg.dim(); ++s) {
    const auto st = static_cast<StateIndex>(s);
    if (a.column(st).empty() && !a.tainted(st)) continue;
    out += cfg.label(st) + " -> " + render_column(a, st);
    if (a.tainted(st)) out += " [tainted]";
    out += '\n';
  }
  return out;
}

#define QFOCK_FOCK_INSTANTIATE(F)                                              \
  template class SparseOperator<F>;                                            \
  template SparseOperator<F> compose(const SparseOperator<F>&,                 \
                                     const SparseOperator<F>&);                \
  template SparseOperator<F> operator+(const SparseOperator<F>&,               \
                                       const SparseOperator<F>&);              \
  template SparseOperator<F> identity(const Realization<F>&);                  \
  template SparseOperator<F> zero(const Realization<F>&);                      \
  template SparseOperator<F> osc_plus(const Realization<F>&, int);             \
  template SparseOperator<F> osc_minus(const Realization<F>&, int);            \
  template SparseOperator<F> diag_exp(const Realization<F>&,                   \
                                      std::span<const int>, int);              \
  template SparseOperator<F> diag_poly(                                        \
      const Realization<F>&,                                                   \
      const std::function<Scalar(std::span<const std::uint8_t>)>&);            \
  template SparseOperator<F> scale(const Realization<F>&, const Scalar&,       \
                                   const SparseOperator<F>&);                  \
  template SparseOperator<F> commutator(const SparseOperator<F>&,              \
                                        const SparseOperator<F>&);             \
  template SparseOperator<F> anticommutator(const SparseOperator<F>&,          \
                                            const SparseOperator<F>&);         \
  template SparseOperator<F> q_commutator(const Realization<F>&,               \
                                          const SparseOperator<F>&,            \
                                          const SparseOperator<F>&,            \
                                          const Rational&);                    \
  template SparseOperator<F> power(const Realization<F>&,                      \
                                   const SparseOperator<F>&, int);             \
  template std::string render(const SparseOperator<F>&);                       \
  template std::string render_column(const SparseOperator<F>&, StateIndex);

QFOCK_FOCK_INSTANTIATE(Scalar)
QFOCK_FOCK_INSTANTIATE(GaussianRational)

}  // namespace qfock
