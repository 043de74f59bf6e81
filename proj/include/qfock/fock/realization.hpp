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
#include <vector>

#include "qfock/fock/mode_config.hpp"
#include "qfock/scalar/scalar.hpp"

namespace qfock {

/// The coefficient field an operator is realized over, with the map that
/// carries exact Scalars into it.
///
/// Realization<Scalar> keeps everything exact. Realization<GaussianRational>
/// evaluates every scalar at a fixed point t = t0, so operators built through
/// it are the exact operators specialised at t0.
///
/// An optional gauge is a per-state invertible diagonal G. Oscillator
/// constructors conjugate by it (A -> G A G^-1); diagonal constructors are
/// unaffected since they commute with G.
template <class F>
class Realization {
 public:
  /// Exact realization. Only valid for F = Scalar.
  explicit Realization(ModeConfig config);
  /// Specialization at t = t0. Only valid for F = GaussianRational; throws
  /// DomainError if t0 == 0.
  Realization(ModeConfig config, GaussianRational t0);

  const ModeConfig& config() const { return config_; }
  const std::optional<GaussianRational>& point() const { return point_; }

  /// Throws PoleError if s has a pole at the realization point.
  F lift(const Scalar& s) const;

  /// Installs G; throws ShapeError on wrong length and DomainError on a zero.
  void set_gauge(std::vector<Rational> diagonal);
  bool gauged() const { return !gauge_.empty(); }
  /// G(target) / G(source).
  Rational gauge_ratio(StateIndex target, StateIndex source) const;

 private:
  ModeConfig config_;
  std::optional<GaussianRational> point_;
  std::vector<Rational> gauge_;
};

extern template class Realization<Scalar>;
extern template class Realization<GaussianRational>;

}  // namespace qfock
