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


#include "qfock/fock/realization.hpp"

#include <algorithm>
#include <type_traits>

#include "qfock/error.hpp"

namespace qfock {

template <class F>
Realization<F>::Realization(ModeConfig config) : config_(std::move(config)) {
  static_assert(std::is_same_v<F, Scalar> || std::is_same_v<F, GaussianRational>);
  if constexpr (!std::is_same_v<F, Scalar>) {
    throw ConfigError("a sampled realization needs an evaluation point");
  }
}

template <class F>
Realization<F>::Realization(ModeConfig config, GaussianRational t0)
    : config_(std::move(config)), point_(std::move(t0)) {
  if constexpr (std::is_same_v<F, Scalar>) {
    throw ConfigError("an exact realization takes no evaluation point");
  }
  if (point_->is_zero()) throw DomainError("evaluation point t = 0");
}

template <class F>
F Realization<F>::lift(const Scalar& s) const {
  if constexpr (std::is_same_v<F, Scalar>) {
    return s;
  } else {
    return eval_at(s, *point_);
  }
}

template <class F>
void Realization<F>::set_gauge(std::vector<Rational> diagonal) {
  if (diagonal.size() != config_.dim()) {
    throw ShapeError("gauge diagonal length differs from basis dimension");
  }
  if (std::any_of(diagonal.begin(), diagonal.end(),
                  [](const Rational& g) { return g.is_zero(); })) {
    throw DomainError("gauge diagonal must be invertible");
  }
  gauge_ = std::move(diagonal);
}

template <class F>
Rational Realization<F>::gauge_ratio(StateIndex target, StateIndex source) const {
  if (gauge_.empty()) return Rational(1);
  return gauge_[target] / gauge_[source];
}

template class Realization<Scalar>;
template class Realization<GaussianRational>;

}  // namespace qfock
