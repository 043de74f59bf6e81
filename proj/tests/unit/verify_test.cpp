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


#include <gtest/gtest.h>

#include <array>

#include "json.hpp"
#include "qfock/dsl/bind.hpp"
#include "qfock/dsl/parser.hpp"
#include "qfock/dsl/suites.hpp"
#include "qfock/verify/verify.hpp"

namespace qfock::verify {
namespace {

using dsl::RelationMode;

Report run_text(const std::string& text, const VerifyConfig& cfg, int modes, int cutoff) {
  return run(dsl::parse_suite(text), cfg, ModeConfig(modes, cutoff));
}

Report run_builtin(const std::string& name, const VerifyConfig& cfg, int cutoff) {
  const dsl::Suite s = dsl::builtin_suite(name);
  return run(s, cfg, ModeConfig(s.modes, cutoff));
}

std::vector<Outcome> outcomes(const Report& r) {
  std::vector<Outcome> out;
  for (const auto& rec : r.relations) out.push_back(rec.outcome);
  return out;
}

VerifyConfig sample_config(std::uint64_t seed = 0) {
  VerifyConfig cfg;
  cfg.mode = RelationMode::sample;
  cfg.seed = seed;
  return cfg;
}

TEST(Run, QoscPassesExactly) {
  const Report r = run_builtin("qosc", {}, 8);
  EXPECT_EQ(r.overall(), Outcome::pass);
  EXPECT_EQ(r.relations.size(), 5u);
  const Report four = run_text(dsl::qosc_text(4), {}, 4, 4);
  EXPECT_EQ(four.overall(), Outcome::pass);
}

TEST(Run, QHiggsExactAndSample) {
  EXPECT_EQ(run_builtin("qhiggs-proposition", {}, 4).overall(), Outcome::pass);
  const Report s = run_builtin("qhiggs-proposition", sample_config(), 3);
  EXPECT_EQ(s.overall(), Outcome::pass);
  for (const auto& rec : s.relations) {
    EXPECT_EQ(rec.mode, RelationMode::sample);
    EXPECT_GE(rec.samples_used, 1);
  }
}

TEST(Run, CorruptedRelationFailsWithWitness) {
  const std::string text = "suite corrupted\nmodes 4\nassert bad: [L, Mplus] == 3 Mplus\n";
  const Report r = run_text(text, {}, 4, 4);
  ASSERT_EQ(r.overall(), Outcome::fail);
  const auto& w = r.relations[0].witness;
  ASSERT_TRUE(w);
  // The witness re-verifies: both sides at (target, state) match the report.
  const dsl::Suite s = dsl::parse_suite(text);
  const ModeConfig cfg(4, 4);
  const Realization<Scalar> real(cfg);
  dsl::Binder<Scalar> binder(s, real);
  const auto [lhs, rhs] = binder.relation(0);
  StateIndex state = 0, target = 0;
  for (StateIndex k = 0; k < cfg.dim(); ++k) {
    if (cfg.label(k) == w->state) state = k;
    if (cfg.label(k) == w->target) target = k;
  }
  EXPECT_EQ(lhs.entry(target, state).to_string(), w->lhs);
  EXPECT_EQ(rhs.entry(target, state).to_string(), w->rhs);
  EXPECT_NE(w->lhs, w->rhs);

  const Report sampled = run_text(text, sample_config(3), 4, 4);
  ASSERT_EQ(sampled.overall(), Outcome::fail);
  ASSERT_TRUE(sampled.relations[0].witness);
  EXPECT_TRUE(sampled.relations[0].witness->point);
}

TEST(Run, EmptyInteriorIsInconclusive) {
  VerifyConfig cfg;
  cfg.margin = Margin::of(9);
  const Report r = run_builtin("qosc", cfg, 4);
  EXPECT_EQ(r.overall(), Outcome::inconclusive);
  EXPECT_EQ(r.relations[0].columns_compared, 0u);
}

TEST(Run, Precedence) {
  const std::string text =
      "suite p\nmodes 1\n"
      "assert a: [A1m, A1p] == qpow(n1) @mode=limit\n"
      "assert b: [A1m, A1p] == qpow(n1) @mode=sample @margin=2\n"
      "assert c: [A1m, A1p] == qpow(n1)\n";
  const Report plain = run_text(text, {}, 1, 6);
  EXPECT_EQ(plain.relations[0].mode, RelationMode::limit);
  EXPECT_EQ(plain.relations[1].mode, RelationMode::sample);
  EXPECT_EQ(plain.relations[1].margin, "2");
  EXPECT_EQ(plain.relations[2].mode, RelationMode::exact);
  EXPECT_EQ(plain.relations[2].margin, "auto");
  VerifyConfig cfg;
  cfg.mode = RelationMode::exact;
  cfg.margin = Margin::of(1);
  const Report forced = run_text(text, cfg, 1, 6);
  EXPECT_EQ(forced.relations[0].mode, RelationMode::limit);
  EXPECT_EQ(forced.relations[1].mode, RelationMode::exact);
  EXPECT_EQ(forced.relations[1].margin, "1");
  EXPECT_EQ(forced.overall(), Outcome::pass);
}

TEST(Run, SampleCountOverride) {
  VerifyConfig cfg = sample_config();
  cfg.samples = 40;
  const Report r = run_text("suite s\nmodes 1\nassert a: A1p A1m == N1\n", cfg, 1, 4);
  EXPECT_EQ(r.relations[0].samples_used, 40);
  EXPECT_EQ(r.overall(), Outcome::pass);
}

TEST(Run, PoleAtSamplePointIsRedrawn) {
  const std::string text = "suite s\nmodes 1\nassert a: (1/(t - 2)) A1p == A1p / (t - 2)\n";
  VerifyConfig cfg = sample_config();
  cfg.points = {GaussianRational(Rational(2)), GaussianRational(Rational(3))};
  const Report r = run_text(text, cfg, 1, 4);
  EXPECT_EQ(r.overall(), Outcome::pass);
  cfg.points = {GaussianRational(Rational(2))};
  cfg.max_retries = 0;
  EXPECT_THROW(run_text(text, cfg, 1, 4), SampleError);
  cfg.points = {GaussianRational(Rational(3)), GaussianRational(Rational(3))};
  EXPECT_THROW(run_text(text, cfg, 1, 4), ConfigError);
}

TEST(Run, LimitMode) {
  EXPECT_EQ(classical_alpha_check(ModeConfig(4, 4)).outcome, Outcome::pass);
  const RelationRecord broken = classical_alpha_check(ModeConfig(4, 4), 0);
  EXPECT_EQ(broken.outcome, Outcome::fail);
  EXPECT_TRUE(broken.witness);
  // A pole at q = 1 fails rather than passing silently.
  const Report pole =
      run_text("suite s\nmodes 1\nassert a: A1p / (1 - q) == 0 @mode=limit\n", {}, 1, 3);
  EXPECT_EQ(pole.overall(), Outcome::fail);
  // Both sides may diverge as long as the difference has a finite zero limit.
  const Report removable = run_text(
      "suite s\nmodes 1\nassert a: qnum(n1) / (1 - q) == (1 - qpow(n1)) / (1 - q)^2 @mode=limit\n",
      {}, 1, 3);
  EXPECT_EQ(removable.overall(), Outcome::pass);
}

TEST(RequiredSamples, DegreeBounds) {
  const ModeConfig cfg(2, 3);
  const Realization<Scalar> r(cfg);
  const std::array<int, 2> a = {4, 0}, b = {0, 8};
  const auto x = diag_exp(r, a, 0);  // exponents 0..12
  const auto y = diag_exp(r, b, 1);  // exponents 1..25
  EXPECT_EQ(required_samples(x, y), 26);
  EXPECT_EQ(required_samples(x, x), 13);
  EXPECT_EQ(required_samples(identity(r), identity(r)), 1);
  // Additive under composition.
  EXPECT_EQ(required_samples(compose(x, y), zero(r)), 12 + 24 + 1);
  // Per-column bounds never exceed the global one.
  const auto m = osc_minus(r, 1);
  const auto mm = compose(m, compose(m, x));
  for (StateIndex s = 0; s < cfg.dim(); ++s) {
    EXPECT_LE(required_samples(mm, y, s), required_samples(mm, y));
  }
  EXPECT_EQ(required_samples(x, y, 0), 2);  // t^0 against t^1
}

TEST(Report, JsonSchemaAndDeterminism) {
  VerifyConfig cfg = sample_config(11);
  const Report a = run_builtin("su11-metaplectic", cfg, 4);
  const Report b = run_builtin("su11-metaplectic", cfg, 4);
  EXPECT_EQ(to_json(a), to_json(b));
  const auto j = nlohmann::json::parse(to_json(a));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "engine_version", "relations", "suite"}));
  EXPECT_EQ(j["suite"], "su11-metaplectic");
  EXPECT_EQ(j["engine_version"], kEngineVersion);
  EXPECT_EQ(j["config"]["seed"], 11);
  ASSERT_EQ(j["relations"].size(), a.relations.size());
  for (const auto& rel : j["relations"]) {
    for (const char* key : {"name", "outcome", "mode", "margin", "columns_compared",
                            "samples_used", "witness", "wall_time_ms"}) {
      EXPECT_TRUE(rel.contains(key)) << key;
    }
    EXPECT_TRUE(rel["wall_time_ms"].is_null());
  }
  cfg.timings = true;
  const auto timed = nlohmann::json::parse(to_json(run_builtin("su11-metaplectic", cfg, 3)));
  EXPECT_TRUE(timed["relations"][0]["wall_time_ms"].is_number());
  EXPECT_NE(to_text(a).find("overall pass"), std::string::npos);
}

TEST(Properties, SampleAgreesWithExact) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"qosc", 4},           {"su11-metaplectic", 4}, {"su11-tilde", 4},
      {"o3-cartesian", 3},   {"howe-commutation", 2}, {"commutant", 2},
      {"qhiggs-proposition", 2}, {"script-K-consistency", 2}};
  for (const auto& [name, cutoff] : cases) {
    const Report exact = run_builtin(name, {}, cutoff);
    const Report sampled = run_builtin(name, sample_config(5), cutoff);
    EXPECT_EQ(outcomes(exact), outcomes(sampled)) << name;
    EXPECT_NE(exact.overall(), Outcome::fail) << name;
  }
}

TEST(Properties, TruncationSoundness) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"qosc", 6}, {"o3-cartesian", 4}, {"qhiggs-proposition", 3}};
  for (const auto& [name, cutoff] : cases) {
    const Report small = run_builtin(name, {}, cutoff);
    const Report large = run_builtin(name, {}, cutoff + 2);
    ASSERT_EQ(small.overall(), Outcome::pass) << name;
    EXPECT_EQ(outcomes(small), outcomes(large)) << name;
    for (std::size_t k = 0; k < small.relations.size(); ++k) {
      EXPECT_GE(large.relations[k].columns_compared, small.relations[k].columns_compared);
    }
  }
}

TEST(Properties, GaugeRobustness) {
  for (const char* name : {"qosc", "qhiggs-proposition", "o3-cartesian"}) {
    const Report plain = run_builtin(name, {}, 3);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      VerifyConfig cfg;
      cfg.gauge_seed = seed;
      EXPECT_EQ(outcomes(run_builtin(name, cfg, 3)), outcomes(plain)) << name << " " << seed;
    }
  }
  // A failing relation keeps failing under a gauge.
  VerifyConfig cfg;
  cfg.gauge_seed = 4;
  EXPECT_EQ(run_text("suite s\nmodes 4\nassert bad: [L, Mplus] == 3 Mplus\n", cfg, 4, 3).overall(),
            Outcome::fail);
}

TEST(Properties, SamplePointsAreDistinctAndInRange) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pts = sample_points(seed, 200);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ASSERT_TRUE(pts[i].is_real());
      const Rational v = pts[i].re();
      EXPECT_TRUE(v > Rational(2, 97) && v < Rational(97, 2)) << v.to_string();
      EXPECT_NE(v, Rational(1));
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(pts[i], pts[j]);
    }
    EXPECT_EQ(pts, sample_points(seed, 200));
  }
}

}  // namespace
}  // namespace qfock::verify
