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


#include "qfock/verify/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <memory>
#include <random>
#include <sstream>

#include "json.hpp"

#include "qfock/dsl/bind.hpp"
#include "qfock/dsl/parser.hpp"

namespace qfock::verify {
namespace {

using dsl::RelationMode;
using GR = GaussianRational;

// Nonzero gauge entries of both signs with small numerators and
// denominators.
std::vector<Rational> gauge_diagonal(std::uint64_t seed, std::size_t dim) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> g;
  g.reserve(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const auto num = static_cast<std::int64_t>(1 + rng() % 9);
    const auto den = static_cast<std::int64_t>(1 + rng() % 9);
    g.emplace_back(rng() % 2 ? -num : num, den);
  }
  return g;
}

// Deterministic stream of a/b with 2 <= a, b <= 97 and a != b, so |t| != 1.
class PointStream {
 public:
  explicit PointStream(std::uint64_t seed) : rng_(seed) {}
  GR next() {
    for (;;) {
      const auto a = static_cast<std::int64_t>(2 + rng_() % 96);
      const auto b = static_cast<std::int64_t>(2 + rng_() % 96);
      if (a != b) return GR(Rational(a, b));
    }
  }

 private:
  std::mt19937_64 rng_;
};

std::string value_string(const Scalar& v) { return v.to_string(); }
std::string value_string(const GR& v) { return v.to_string(); }

template <class F>
WitnessRecord witness_record(const ModeConfig& cfg, const Witness<F>& w) {
  return {cfg.label(w.state), cfg.label(w.target), value_string(w.lhs),
          value_string(w.rhs), std::nullopt};
}

// One realization at a sample point with its lazily evaluated suite.
struct SamplePoint {
  GR t0;
  std::unique_ptr<Realization<GR>> r;
  std::unique_ptr<dsl::Binder<GR>> binder;
};

class Runner {
 public:
  Runner(const dsl::Suite& suite, const VerifyConfig& cfg, const ModeConfig& modes)
      : suite_(suite), cfg_(cfg), modes_(modes), exact_r_(modes), stream_(cfg.seed) {
    if (cfg.gauge_seed) {
      gauge_ = gauge_diagonal(*cfg.gauge_seed, modes.dim());
      exact_r_.set_gauge(gauge_);
    }
    exact_ = std::make_unique<dsl::Binder<Scalar>>(suite, exact_r_);
    for (const auto& p : cfg.points) {
      if (p.is_zero()) throw ConfigError("sample points must be nonzero");
      if (std::count(cfg.points.begin(), cfg.points.end(), p) > 1) {
        throw ConfigError("sample points must be distinct");
      }
    }
  }

  RelationRecord relation(std::size_t i) {
    const dsl::Relation& rel = suite_.relations[i];
    RelationRecord rec;
    rec.name = rel.name;
    if (rel.mode == RelationMode::limit) {
      rec.mode = RelationMode::limit;
    } else {
      rec.mode = cfg_.mode.value_or(rel.mode.value_or(RelationMode::exact));
    }
    Margin margin = Margin::automatic();
    if (cfg_.margin) {
      margin = *cfg_.margin;
    } else if (rel.margin) {
      margin = Margin::of(*rel.margin);
    }
    rec.margin = margin.to_string();
    const auto start = std::chrono::steady_clock::now();
    switch (rec.mode) {
      case RelationMode::exact:
        exact(i, margin, rec);
        break;
      case RelationMode::limit:
        limit(i, margin, rec);
        break;
      case RelationMode::sample:
        sample(i, margin, rec);
        break;
    }
    if (cfg_.timings) {
      rec.wall_time_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    }
    return rec;
  }

 private:
  void exact(std::size_t i, const Margin& margin, RelationRecord& rec) {
    auto [lhs, rhs] = exact_->relation(i);
    const auto cmp = equal_on_interior(lhs, rhs, margin);
    rec.outcome = cmp.outcome;
    rec.columns_compared = cmp.columns_compared;
    if (cmp.witness) rec.witness = witness_record(modes_, *cmp.witness);
  }

  // Entrywise q -> 1 limit of the residual on untainted interior columns.
  void limit(std::size_t i, const Margin& margin, RelationRecord& rec) {
    auto [lhs, rhs] = exact_->relation(i);
    const auto m = resolve_margin(margin, lhs.max_raise(), rhs.max_raise());
    auto limit_string = [](const Scalar& v) {
      try {
        return limit_at_one(v).to_string();
      } catch (const PoleError&) {
        return v.to_string();
      }
    };
    for (std::size_t c = 0; c < modes_.dim(); ++c) {
      const auto s = static_cast<StateIndex>(c);
      if (!in_interior(modes_, s, m) || lhs.tainted(s) || rhs.tainted(s)) continue;
      ++rec.columns_compared;
      std::vector<StateIndex> targets;
      for (const auto& e : lhs.column(s)) targets.push_back(e.target);
      for (const auto& e : rhs.column(s)) targets.push_back(e.target);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (const StateIndex target : targets) {
        const Scalar l = lhs.entry(target, s);
        const Scalar r = rhs.entry(target, s);
        bool vanishes = false;
        try {
          vanishes = limit_at_one(l - r).is_zero();
        } catch (const PoleError&) {
        }
        if (!vanishes) {
          rec.outcome = Outcome::fail;
          rec.witness = WitnessRecord{modes_.label(s), modes_.label(target), limit_string(l),
                                      limit_string(r), std::nullopt};
          return;
        }
      }
    }
    rec.outcome = rec.columns_compared ? Outcome::pass : Outcome::inconclusive;
  }

  // A column passes once its residual vanishes at k_s distinct points
  // where it is untainted. Untainted columns equal the untruncated operator
  // at t0, and every untruncated residual entry of column s is P/den with
  // the exponents of P spanning fewer than k_s, so k_s zeros away from the
  // roots of den force P = 0.
  void sample(std::size_t i, const Margin& margin, RelationRecord& rec) {
    const std::size_t dim = modes_.dim();
    std::vector<int> verified(dim, 0);
    std::vector<int> needed(dim, 0);
    int k = 1;
    for (int p = 0; p < k; ++p) {
      auto [lhs, rhs] = at_point(i, static_cast<std::size_t>(p));
      const auto m = resolve_margin(margin, lhs.max_raise(), rhs.max_raise());
      if (p == 0) {
        for (std::size_t c = 0; c < dim; ++c) {
          const auto s = static_cast<StateIndex>(c);
          if (!in_interior(modes_, s, m) || lhs.tainted(s) || rhs.tainted(s)) continue;
          needed[c] = std::max(required_samples(lhs, rhs, s), cfg_.samples.value_or(1));
          k = std::max(k, needed[c]);
        }
      }
      for (std::size_t c = 0; c < dim; ++c) {
        const auto s = static_cast<StateIndex>(c);
        if (!in_interior(modes_, s, m) || lhs.tainted(s) || rhs.tainted(s)) continue;
        if (auto w = column_difference(lhs, rhs, s)) {
          rec.outcome = Outcome::fail;
          rec.samples_used = p + 1;
          rec.witness = witness_record(modes_, *w);
          rec.witness->point = points_[p].t0.to_string();
          return;
        }
        ++verified[c];
      }
    }
    rec.samples_used = k;
    for (std::size_t c = 0; c < dim; ++c) {
      if (needed[c] > 0 && verified[c] >= needed[c]) ++rec.columns_compared;
    }
    rec.outcome = rec.columns_compared ? Outcome::pass : Outcome::inconclusive;
  }

  // Relation i at sample slot p. A pole, or a root of the residual's
  // denominator bound, replaces the slot's point with a fresh one.
  std::pair<SparseOperator<GR>, SparseOperator<GR>> at_point(std::size_t i, std::size_t p) {
    while (points_.size() <= p) install(points_.size(), next_point());
    for (int attempt = 0;; ++attempt) {
      try {
        auto sides = points_[p].binder->relation(i);
        const DegreeMeta meta = DegreeMeta::sum(sides.first.meta(), sides.second.meta());
        if (!meta.range ||
            !eval_at(Scalar::fraction(meta.den, LaurentPoly(1)), points_[p].t0).is_zero()) {
          return sides;
        }
      } catch (const PoleError&) {
      }
      if (attempt >= cfg_.max_retries) {
        throw SampleError("relation '" + suite_.relations[i].name +
                          "': no usable sample point after " +
                          std::to_string(cfg_.max_retries) + " redraws");
      }
      install(p, next_point());
    }
  }

  GR next_point() {
    for (;;) {
      GR candidate = explicit_used_ < cfg_.points.size() ? cfg_.points[explicit_used_++]
                                                         : stream_.next();
      const bool fresh = std::none_of(drawn_.begin(), drawn_.end(),
                                      [&](const GR& d) { return d == candidate; });
      if (fresh) {
        drawn_.push_back(candidate);
        return candidate;
      }
    }
  }

  void install(std::size_t p, GR t0) {
    SamplePoint sp;
    sp.t0 = t0;
    sp.r = std::make_unique<Realization<GR>>(modes_, t0);
    if (!gauge_.empty()) sp.r->set_gauge(gauge_);
    sp.binder = std::make_unique<dsl::Binder<GR>>(suite_, *sp.r);
    if (p == points_.size()) {
      points_.push_back(std::move(sp));
    } else {
      points_[p] = std::move(sp);
    }
  }

  const dsl::Suite& suite_;
  const VerifyConfig& cfg_;
  ModeConfig modes_;
  Realization<Scalar> exact_r_;
  std::vector<Rational> gauge_;
  std::unique_ptr<dsl::Binder<Scalar>> exact_;
  PointStream stream_;
  std::size_t explicit_used_ = 0;
  std::vector<GR> drawn_;
  std::vector<SamplePoint> points_;
};

nlohmann::ordered_json witness_json(const std::optional<WitnessRecord>& w) {
  if (!w) return nullptr;
  nlohmann::ordered_json j;
  j["state"] = w->state;
  j["target"] = w->target;
  j["lhs"] = w->lhs;
  j["rhs"] = w->rhs;
  j["point"] = w->point ? nlohmann::ordered_json(*w->point) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

Outcome Report::overall() const {
  bool inconclusive = false;
  for (const auto& r : relations) {
    if (r.outcome == Outcome::fail) return Outcome::fail;
    inconclusive = inconclusive || r.outcome == Outcome::inconclusive;
  }
  return inconclusive ? Outcome::inconclusive : Outcome::pass;
}

Report run(const dsl::Suite& suite, const VerifyConfig& cfg, const ModeConfig& modes) {
  Report report;
  report.suite = suite.name;
  report.modes = modes.modes();
  report.cutoff = modes.cutoff();
  report.config = cfg;
  Runner runner(suite, cfg, modes);
  for (std::size_t i = 0; i < suite.relations.size(); ++i) {
    report.relations.push_back(runner.relation(i));
  }
  return report;
}

template <class F>
int required_samples(const SparseOperator<F>& lhs, const SparseOperator<F>& rhs) {
  return DegreeMeta::sum(lhs.meta(), rhs.meta()).required_samples();
}

template <class F>
int required_samples(const SparseOperator<F>& lhs, const SparseOperator<F>& rhs,
                     StateIndex s) {
  const LaurentPoly den = poly_lcm(lhs.meta().den, rhs.meta().den);
  const auto r = range_hull(range_widen(lhs.column_range(s), den, lhs.meta().den),
                            range_widen(rhs.column_range(s), den, rhs.meta().den));
  return r ? r->second - r->first + 1 : 1;
}

template int required_samples(const SparseOperator<Scalar>&, const SparseOperator<Scalar>&);
template int required_samples(const SparseOperator<GR>&, const SparseOperator<GR>&);
template int required_samples(const SparseOperator<Scalar>&, const SparseOperator<Scalar>&,
                              StateIndex);
template int required_samples(const SparseOperator<GR>&, const SparseOperator<GR>&,
                              StateIndex);

std::string classical_alpha_text(int constant) {
  std::ostringstream s;
  s << "suite classical-alpha\n"
    << "modes 4\n\n"
    << "let a1 = H^2 - 2 (L(1,2)^2 + L(3,4)^2) " << (constant < 0 ? "- " : "+ ")
    << (constant < 0 ? -constant : constant) << "\n"
    << "let a2 = 2 H (L(1,2)^2 - L(3,4)^2)\n\n"
    << "assert higgs-commutator: [Mplus, Mminus] == -L^3 + a1 L + a2 @mode=limit\n";
  return s.str();
}

RelationRecord classical_alpha_check(const ModeConfig& modes, int constant) {
  const dsl::Suite suite = dsl::parse_suite(classical_alpha_text(constant));
  return run(suite, VerifyConfig{}, modes).relations.front();
}

std::vector<GaussianRational> sample_points(std::uint64_t seed, std::size_t count) {
  PointStream stream(seed);
  std::vector<GR> out;
  while (out.size() < count) {
    GR p = stream.next();
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::string to_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json config;
  config["modes"] = report.modes;
  config["cutoff"] = report.cutoff;
  config["mode"] = report.config.mode ? json(dsl::to_string(*report.config.mode)) : json(nullptr);
  config["margin"] = report.config.margin ? json(report.config.margin->to_string()) : json(nullptr);
  config["samples"] = report.config.samples ? json(*report.config.samples) : json(nullptr);
  config["seed"] = report.config.seed;
  config["gauge_seed"] = report.config.gauge_seed ? json(*report.config.gauge_seed) : json(nullptr);
  json points = json::array();
  for (const auto& p : report.config.points) points.push_back(p.to_string());
  config["points"] = points;
  json relations = json::array();
  for (const auto& r : report.relations) {
    json j;
    j["name"] = r.name;
    j["outcome"] = to_string(r.outcome);
    j["mode"] = dsl::to_string(r.mode);
    j["margin"] = r.margin;
    j["columns_compared"] = r.columns_compared;
    j["samples_used"] = r.samples_used;
    j["witness"] = witness_json(r.witness);
    j["wall_time_ms"] = r.wall_time_ms ? json(*r.wall_time_ms) : json(nullptr);
    relations.push_back(j);
  }
  json out;
  out["suite"] = report.suite;
  out["config"] = config;
  out["relations"] = relations;
  out["engine_version"] = report.engine_version;
  return out.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::size_t width = 8;
  for (const auto& r : report.relations) width = std::max(width, r.name.size());
  std::ostringstream s;
  s << "suite " << report.suite << "  modes " << report.modes << "  cutoff " << report.cutoff
    << "\n";
  s << std::left << std::setw(static_cast<int>(width) + 2) << "relation" << std::setw(14)
    << "outcome" << std::setw(8) << "mode" << std::setw(8) << "margin" << std::setw(10)
    << "columns" << std::setw(9) << "samples" << "time_ms\n";
  for (const auto& r : report.relations) {
    s << std::setw(static_cast<int>(width) + 2) << r.name << std::setw(14)
      << to_string(r.outcome) << std::setw(8) << dsl::to_string(r.mode) << std::setw(8)
      << r.margin << std::setw(10) << r.columns_compared << std::setw(9) << r.samples_used;
    if (r.wall_time_ms) {
      s << std::fixed << std::setprecision(1) << *r.wall_time_ms;
    } else {
      s << "-";
    }
    s << "\n";
    if (r.witness) {
      s << "  witness " << r.witness->state << " -> " << r.witness->target << ": lhs "
        << r.witness->lhs << ", rhs " << r.witness->rhs;
      if (r.witness->point) s << " at t = " << *r.witness->point;
      s << "\n";
    }
  }
  s << "overall " << to_string(report.overall()) << "\n";
  return s.str();
}

}  // namespace qfock::verify
