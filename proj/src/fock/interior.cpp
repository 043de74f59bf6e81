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


#include "qfock/fock/interior.hpp"

#include <algorithm>

#include "qfock/error.hpp"

namespace qfock {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string Margin::to_string() const {
  return fixed ? std::to_string(*fixed) : "auto";
}

std::vector<int> resolve_margin(const Margin& m, const std::vector<int>& a_raise,
                                const std::vector<int>& b_raise) {
  std::vector<int> out(a_raise.size(), 0);
  if (m.fixed) {
    if (*m.fixed < 0) throw DomainError("margin must be nonnegative");
    std::fill(out.begin(), out.end(), *m.fixed);
    return out;
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::max({0, a_raise[k], b_raise[k]});
  }
  return out;
}

bool in_interior(const ModeConfig& cfg, StateIndex s, const std::vector<int>& margin) {
  for (int k = 0; k < cfg.modes(); ++k) {
    if (cfg.occ(s, k) > cfg.cutoff() - margin[k]) return false;
  }
  return true;
}

template <class F>
std::optional<Witness<F>> column_difference(const SparseOperator<F>& a,
                                            const SparseOperator<F>& b,
                                            StateIndex s) {
  const auto& x = a.column(s);
  const auto& y = b.column(s);
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].target < y[j].target)) {
      return Witness<F>{s, x[i].target, x[i].value, F()};
    }
    if (i == x.size() || y[j].target < x[i].target) {
      return Witness<F>{s, y[j].target, F(), y[j].value};
    }
    if (!(x[i].value == y[j].value)) {
      return Witness<F>{s, x[i].target, x[i].value, y[j].value};
    }
    ++i;
    ++j;
  }
  return std::nullopt;
}

template <class F>
InteriorComparison<F> equal_on_interior(const SparseOperator<F>& a,
                                        const SparseOperator<F>& b,
                                        const Margin& margin) {
  require_same_config(a.config(), b.config());
  InteriorComparison<F> out;
  out.margin = resolve_margin(margin, a.max_raise(), b.max_raise());
  const ModeConfig& cfg = a.config();
  for (std::size_t c = 0; c < cfg.dim(); ++c) {
    const auto s = static_cast<StateIndex>(c);
    if (a.tainted(s) || b.tainted(s) || !in_interior(cfg, s, out.margin)) continue;
    ++out.columns_compared;
    if (auto w = column_difference(a, b, s)) {
      out.outcome = Outcome::fail;
      out.witness = std::move(w);
      return out;
    }
  }
  out.outcome = out.columns_compared > 0 ? Outcome::pass : Outcome::inconclusive;
  return out;
}

template InteriorComparison<Scalar> equal_on_interior(const SparseOperator<Scalar>&,
                                                      const SparseOperator<Scalar>&,
                                                      const Margin&);
template InteriorComparison<GaussianRational> equal_on_interior(
    const SparseOperator<GaussianRational>&,
    const SparseOperator<GaussianRational>&, const Margin&);
template std::optional<Witness<Scalar>> column_difference(
    const SparseOperator<Scalar>&, const SparseOperator<Scalar>&, StateIndex);
template std::optional<Witness<GaussianRational>> column_difference(
    const SparseOperator<GaussianRational>&,
    const SparseOperator<GaussianRational>&, StateIndex);

}  // namespace qfock
