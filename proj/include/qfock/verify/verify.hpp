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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfock/dsl/ast.hpp"
#include "qfock/error.hpp"
#include "qfock/fock/interior.hpp"
#include "qfock/fock/mode_config.hpp"
#include "qfock/scalar/gaussian.hpp"

namespace qfock::verify {

inline constexpr const char* kEngineVersion = "qfock 1.0.0";

/// Raised when no usable sample point can be drawn within the retry budget.
class SampleError : public Error {
 public:
  using Error::Error;
};

/// Run-wide settings. Unset optionals defer to the per-relation attributes.
///
/// Precedence: a relation marked @mode=limit is always checked in limit mode;
/// otherwise `mode` overrides the relation's @mode, which overrides exact.
/// `margin` overrides @margin, which overrides the automatic margin. The
/// sample count is max(required_samples, `samples`).
struct VerifyConfig {
  std::optional<dsl::RelationMode> mode;
  std::optional<Margin> margin;
  std::optional<int> samples;
  std::uint64_t seed = 0;
  /// Used before any generated point; must be nonzero and distinct.
  std::vector<GaussianRational> points;
  /// Conjugates every oscillator by a seeded random invertible diagonal.
  std::optional<std::uint64_t> gauge_seed;
  /// Record wall time per relation; off by default so reports are
  /// byte-reproducible.
  bool timings = false;
  /// Pole-avoiding redraws allowed per sample point.
  int max_retries = 64;
};

struct WitnessRecord {
  std::string state;
  std::string target;
  std::string lhs;
  std::string rhs;
  /// Sample point, in sample mode only.
  std::optional<std::string> point;
};

struct RelationRecord {
  std::string name;
  Outcome outcome = Outcome::inconclusive;
  dsl::RelationMode mode = dsl::RelationMode::exact;
  std::string margin;
  std::size_t columns_compared = 0;
  /// Evaluation points used; 0 outside sample mode.
  int samples_used = 0;
  std::optional<WitnessRecord> witness;
  std::optional<double> wall_time_ms;
};

struct Report {
  std::string suite;
  int modes = 0;
  int cutoff = 0;
  VerifyConfig config;
  std::vector<RelationRecord> relations;
  std::string engine_version = kEngineVersion;

  /// fail if any relation failed, else inconclusive if any was, else pass.
  Outcome overall() const;
};

/// Verifies every relation of `suite` on `modes`, in suite order. Throws
/// BindError when the configuration cannot host the suite.
Report run(const dsl::Suite& suite, const VerifyConfig& cfg, const ModeConfig& modes);

/// 1 + the exponent span bounding every entry of lhs - rhs after clearing
/// denominators.
template <class F>
int required_samples(const SparseOperator<F>& lhs, const SparseOperator<F>& rhs);

/// The same bound restricted to column s; never larger than the global one.
template <class F>
int required_samples(const SparseOperator<F>& lhs, const SparseOperator<F>& rhs,
                     StateIndex s);

/// Limit-mode check of the Higgs commutator
/// [M+, M-] = -L^3 + a1 L + a2 with a1 = H^2 - 2(L12^2 + L34^2) + c and
/// a2 = 2H(L12^2 - L34^2). The true constant is c = -4.
RelationRecord classical_alpha_check(const ModeConfig& modes, int constant = -4);

/// Text of the suite used by classical_alpha_check.
std::string classical_alpha_text(int constant);

/// JSON with keys suite, config, relations, engine_version.
std::string to_json(const Report& report);

/// Fixed-width table, one row per relation.
std::string to_text(const Report& report);

/// The sample points `run` would use first for a given seed.
std::vector<GaussianRational> sample_points(std::uint64_t seed, std::size_t count);

extern template int required_samples(const SparseOperator<Scalar>&,
                                     const SparseOperator<Scalar>&);
extern template int required_samples(const SparseOperator<GaussianRational>&,
                                     const SparseOperator<GaussianRational>&);
extern template int required_samples(const SparseOperator<Scalar>&,
                                     const SparseOperator<Scalar>&, StateIndex);
extern template int required_samples(const SparseOperator<GaussianRational>&,
                                     const SparseOperator<GaussianRational>&, StateIndex);

}  // namespace qfock::verify
