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

#include <random>

#include "qfock/error.hpp"
#include "qfock/fock/interior.hpp"

namespace qfock {
namespace {

using Op = SparseOperator<Scalar>;
using R = Realization<Scalar>;

const Scalar kQ = Scalar::t_power(4);

StateIndex st(const ModeConfig& cfg, std::vector<int> occ) { return cfg.index(occ); }

TEST(ModeConfig, LexicographicIndexing) {
  const ModeConfig cfg(2, 3);
  EXPECT_EQ(cfg.dim(), 16u);
  EXPECT_EQ(st(cfg, {0, 0}), 0u);
  EXPECT_EQ(st(cfg, {0, 1}), 1u);
  EXPECT_EQ(st(cfg, {1, 0}), 4u);
  EXPECT_EQ(cfg.label(st(cfg, {2, 3})), "|2,3>");
  EXPECT_THROW(st(cfg, {4, 0}), IndexError);
  EXPECT_THROW(st(cfg, {1}), IndexError);
  EXPECT_THROW(ModeConfig(0, 3), ConfigError);
}

TEST(FockOps, IdentityAndZero) {
  const R r(ModeConfig(2, 4));
  const Op id = identity(r);
  const StateIndex s = st(r.config(), {2, 3});
  EXPECT_EQ(render_column(id, s), "1 |2,3>");
  EXPECT_TRUE(zero(r).column(s).empty());
  EXPECT_TRUE(compose(id, id).same_entries(id));
  EXPECT_EQ(id.max_raise(), (std::vector<int>{0, 0}));
  EXPECT_EQ(id.tainted_count(), 0u);
}

TEST(FockOps, Oscillators) {
  const R r(ModeConfig(2, 4));
  const auto& cfg = r.config();
  EXPECT_EQ(render_column(osc_plus(r, 1), st(cfg, {0, 0})), "1 |1,0>");
  EXPECT_EQ(render_column(osc_minus(r, 1), st(cfg, {1, 0})), "1 |0,0>");
  EXPECT_EQ(render_column(osc_minus(r, 1), st(cfg, {3, 0})), "(t^8 + t^4 + 1) |2,0>");
  EXPECT_TRUE(osc_minus(r, 1).column(st(cfg, {0, 2})).empty());
  EXPECT_TRUE(osc_plus(r, 1).tainted(st(cfg, {4, 1})));
  EXPECT_FALSE(osc_plus(r, 1).tainted(st(cfg, {3, 4})));
  EXPECT_THROW(osc_plus(r, 3), IndexError);
  EXPECT_THROW(osc_minus(r, 0), IndexError);
  // A^- A^+ - q A^+ A^- = 1.
  const Op lhs = compose(osc_minus(r, 1), osc_plus(r, 1)) -
                 scale(r, kQ, compose(osc_plus(r, 1), osc_minus(r, 1)));
  EXPECT_EQ(render_column(lhs, st(cfg, {3, 0})), "1 |3,0>");
  EXPECT_EQ(equal_on_interior(lhs, identity(r), Margin::automatic()).outcome,
            Outcome::pass);
}

TEST(FockOps, DiagonalExponential) {
  const R r(ModeConfig(2, 4));
  const auto& cfg = r.config();
  const std::vector<int> a{-2, 0};
  EXPECT_EQ(render_column(diag_exp(r, a, 1), st(cfg, {3, 2})), "t^-5 |3,2>");
  const std::vector<int> b{4, 0};
  EXPECT_EQ(render_column(diag_exp(r, b, 0), st(cfg, {2, 0})), "t^8 |2,0>");
  const Op a0 = diag_poly(r, [](auto n) { return Scalar(n[0]); });
  const Op ap = osc_plus(r, 1);
  EXPECT_EQ(equal_on_interior(commutator(a0, ap), ap, Margin::automatic()).outcome,
            Outcome::pass);
}

TEST(FockOps, DiagonalPolynomial) {
  const R r(ModeConfig(4, 4));
  const auto& cfg = r.config();
  const Op n1 = diag_poly(r, [](auto n) { return qnum(n[0]); });
  EXPECT_EQ(n1.entry(st(cfg, {4, 0, 0, 0}), st(cfg, {4, 0, 0, 0})), qnum(4));
  const Op l = diag_poly(r, [](auto n) { return Scalar(n[0] + n[1] - n[2] - n[3]); });
  EXPECT_EQ(render_column(l, st(cfg, {1, 1, 0, 0})), "2 |1,1,0,0>");
}

TEST(FockOps, ComposeAndTaint) {
  const R r(ModeConfig(1, 5));
  const auto& cfg = r.config();
  const Op n = compose(osc_plus(r, 1), osc_minus(r, 1));
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(n.entry(st(cfg, {k}), st(cfg, {k})), qnum(k));
  }
  const Op a = osc_plus(r, 1);
  EXPECT_TRUE((a + scale(r, Scalar(-1), a)).same_entries(zero(r)));
  const Op mp = compose(osc_minus(r, 1), osc_plus(r, 1));
  EXPECT_TRUE(mp.tainted(st(cfg, {5})));
  EXPECT_FALSE(mp.tainted(st(cfg, {4})));
  EXPECT_EQ(mp.max_raise(), std::vector<int>{0});
  EXPECT_EQ(a.max_raise(), std::vector<int>{1});
  // Reading back through a tainted column of the outer factor taints too.
  const Op pp = compose(osc_minus(r, 1), compose(osc_plus(r, 1), osc_plus(r, 1)));
  EXPECT_TRUE(pp.tainted(st(cfg, {4})));
  EXPECT_EQ(pp.max_raise(), std::vector<int>{1});
}

TEST(FockOps, Commutators) {
  const R r(ModeConfig(1, 6));
  const auto& cfg = r.config();
  const Op am = osc_minus(r, 1), ap = osc_plus(r, 1);
  EXPECT_EQ(render_column(commutator(am, ap), st(cfg, {2})), "t^8 |2>");
  const Op x = ap + am;
  const Scalar half_gap = q_power(Rational(1, 2)) - q_power(Rational(-1, 2));
  EXPECT_TRUE(q_commutator(r, x, x, Rational(1, 2))
                  .same_entries(scale(r, half_gap, compose(x, x))));
  const Op ac = anticommutator(ap, am);
  EXPECT_EQ(ac.entry(st(cfg, {1}), st(cfg, {1})), qnum(1) + qnum(2));
  EXPECT_TRUE(q_commutator(r, ap, am, Rational(0)).same_entries(commutator(ap, am)));
  EXPECT_THROW(q_commutator(r, ap, am, Rational(1, 3)), DomainError);
}

TEST(FockOps, ConfigMismatch) {
  const R a(ModeConfig(1, 4)), b(ModeConfig(1, 5));
  EXPECT_THROW(compose(identity(a), identity(b)), ShapeError);
  EXPECT_THROW(identity(a) + identity(b), ShapeError);
}

TEST(Interior, Outcomes) {
  const R r(ModeConfig(1, 4));
  const Op n = compose(osc_plus(r, 1), osc_minus(r, 1));
  const Op nd = diag_poly(r, [](auto k) { return qnum(k[0]); });
  auto res = equal_on_interior(n, nd, Margin::of(0));
  EXPECT_EQ(res.outcome, Outcome::pass);
  EXPECT_EQ(res.columns_compared, 5u);
  auto bad = equal_on_interior(identity(r), zero(r), Margin::automatic());
  ASSERT_EQ(bad.outcome, Outcome::fail);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->state, 0u);
  EXPECT_EQ(bad.witness->lhs, Scalar(1));
  EXPECT_TRUE(bad.witness->rhs.is_zero());
  const R small(ModeConfig(1, 1));
  EXPECT_EQ(equal_on_interior(identity(small), identity(small), Margin::of(2)).outcome,
            Outcome::inconclusive);
  EXPECT_THROW(equal_on_interior(n, nd, Margin::of(-1)), DomainError);
}

TEST(Interior, AutoMarginUsesMaxRaise) {
  const R r(ModeConfig(2, 4));
  const Op a = compose(osc_plus(r, 1), osc_plus(r, 1));
  const auto res = equal_on_interior(a, a, Margin::automatic());
  EXPECT_EQ(res.margin, (std::vector<int>{2, 0}));
  EXPECT_EQ(res.columns_compared, 15u);
}

TEST(Rendering, ListsNonzeroColumns) {
  const R r(ModeConfig(1, 2));
  EXPECT_EQ(render(osc_minus(r, 1)), "|1> -> 1 |0>\n|2> -> (t^4 + 1) |1>\n");
  EXPECT_EQ(render(osc_plus(r, 1)), "|0> -> 1 |1>\n|1> -> 1 |2>\n|2> -> 0 [tainted]\n");
}

// Random expressions over oscillators and diagonals, for property tests.
template <class F>
SparseOperator<F> random_expr(std::mt19937_64& rng, const Realization<F>& r,
                              int depth, std::vector<int>& choices, std::size_t& pos) {
  auto pick = [&](int n) {
    if (pos == choices.size()) {
      choices.push_back(std::uniform_int_distribution<int>(0, 1 << 20)(rng));
    }
    return choices[pos++] % n;
  };
  const int m = r.config().modes();
  const int kind = depth == 0 ? pick(3) : pick(6);
  switch (kind) {
    case 0:
      return osc_plus(r, 1 + pick(m));
    case 1:
      return osc_minus(r, 1 + pick(m));
    case 2: {
      std::vector<int> a(m);
      for (int& x : a) x = pick(5) - 2;
      return diag_exp(r, a, pick(3) - 1);
    }
    case 3:
      return compose(random_expr(rng, r, depth - 1, choices, pos),
                     random_expr(rng, r, depth - 1, choices, pos));
    case 4:
      return random_expr(rng, r, depth - 1, choices, pos) +
             random_expr(rng, r, depth - 1, choices, pos);
    default: {
      const Scalar s = Scalar::fraction(LaurentPoly::monomial(1, pick(5) - 2) +
                                            LaurentPoly(pick(3)),
                                        LaurentPoly(1) + LaurentPoly::monomial(1, 4));
      return scale(r, s, random_expr(rng, r, depth - 1, choices, pos));
    }
  }
}

Op random_exact(std::mt19937_64& rng, const R& r, std::vector<int>& choices) {
  std::size_t pos = 0;
  return random_expr(rng, r, 3, choices, pos);
}

TEST(FockProperties, TaintSoundness) {
  std::mt19937_64 rng(2024);
  const ModeConfig small(2, 3), big(2, 5);
  const R rs(small), rb(big);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> choices;
    const Op a = random_exact(rng, rs, choices);
    std::size_t pos = 0;
    const Op b = random_expr(rng, rb, 3, choices, pos);
    for (std::size_t c = 0; c < small.dim(); ++c) {
      const auto s = static_cast<StateIndex>(c);
      if (a.tainted(s)) continue;
      const auto occ = small.occupations(s);
      const StateIndex sb = big.index(std::vector<int>(occ.begin(), occ.end()));
      const auto& col = b.column(sb);
      ASSERT_EQ(col.size(), a.column(s).size()) << trial << " " << small.label(s);
      for (std::size_t i = 0; i < col.size(); ++i) {
        const auto to = big.occupations(col[i].target);
        EXPECT_EQ(small.index(std::vector<int>(to.begin(), to.end())),
                  a.column(s)[i].target);
        EXPECT_EQ(col[i].value, a.column(s)[i].value);
      }
    }
  }
}

TEST(FockProperties, MaxRaiseAndDegreeMetaSound) {
  std::mt19937_64 rng(31);
  const R r(ModeConfig(2, 4));
  const auto& cfg = r.config();
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> choices;
    const Op a = random_exact(rng, r, choices);
    const DegreeMeta& meta = a.meta();
    for (std::size_t c = 0; c < cfg.dim(); ++c) {
      for (const auto& e : a.column(static_cast<StateIndex>(c))) {
        for (int k = 0; k < 2; ++k) {
          EXPECT_LE(cfg.occ(e.target, k) - cfg.occ(static_cast<StateIndex>(c), k),
                    a.max_raise()[k]);
        }
        ASSERT_TRUE(meta.range);
        // value * den must be a Laurent polynomial within the range.
        const Scalar p = e.value * Scalar(meta.den);
        ASSERT_TRUE(p.is_polynomial()) << p;
        EXPECT_GE(p.num().low(), meta.range->first);
        EXPECT_LE(p.num().high(), meta.range->second);
      }
    }
  }
}

TEST(FockProperties, ColumnRangesAndMinShiftSound) {
  std::mt19937_64 rng(47);
  const R r(ModeConfig(2, 4));
  const auto& cfg = r.config();
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<int> choices;
    const Op a = random_exact(rng, r, choices);
    const DegreeMeta& meta = a.meta();
    for (std::size_t c = 0; c < cfg.dim(); ++c) {
      const auto s = static_cast<StateIndex>(c);
      const auto range = a.column_range(s);
      // A column range never exceeds the global one.
      if (range) {
        ASSERT_TRUE(meta.range);
        EXPECT_GE(range->first, meta.range->first);
        EXPECT_LE(range->second, meta.range->second);
      }
      for (const auto& e : a.column(s)) {
        for (int k = 0; k < 2; ++k) {
          EXPECT_GE(cfg.occ(e.target, k) - cfg.occ(s, k), a.min_shift()[k]);
        }
        const Scalar p = e.value * Scalar(meta.den);
        ASSERT_TRUE(p.is_polynomial()) << p;
        ASSERT_TRUE(range) << trial << " " << cfg.label(s);
        EXPECT_GE(p.num().low(), range->first);
        EXPECT_LE(p.num().high(), range->second);
      }
    }
  }
}

TEST(FockProperties, RingLaws) {
  std::mt19937_64 rng(4);
  const R r(ModeConfig(2, 3));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> ca, cb, cc;
    const Op a = random_exact(rng, r, ca);
    const Op b = random_exact(rng, r, cb);
    const Op c = random_exact(rng, r, cc);
    EXPECT_TRUE(compose(compose(a, b), c).same_entries(compose(a, compose(b, c))));
    EXPECT_TRUE(commutator(a, b + c).same_entries(commutator(a, b) + commutator(a, c)));
    const Op jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                      commutator(c, commutator(a, b));
    EXPECT_TRUE(jacobi.same_entries(zero(r)));
  }
}

TEST(FockProperties, DiagonalsCommute) {
  std::mt19937_64 rng(8);
  const R r(ModeConfig(3, 3));
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<int> a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
    const Op x = diag_exp(r, a, d(rng)), y = diag_exp(r, b, d(rng));
    EXPECT_TRUE(commutator(x, y).same_entries(zero(r)));
  }
}

TEST(FockProperties, InteriorEqualityIsSymmetricAndReflexive) {
  std::mt19937_64 rng(77);
  const R r(ModeConfig(2, 4));
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> ca, cb;
    const Op a = random_exact(rng, r, ca);
    const Op b = random_exact(rng, r, cb);
    const auto self = equal_on_interior(a, a, Margin::of(0));
    EXPECT_NE(self.outcome, Outcome::fail);
    EXPECT_EQ(equal_on_interior(a, b, Margin::of(1)).outcome,
              equal_on_interior(b, a, Margin::of(1)).outcome);
  }
}

TEST(FockProperties, SampledRealizationIsEvaluation) {
  std::mt19937_64 rng(13);
  const ModeConfig cfg(2, 3);
  const R exact(cfg);
  const GaussianRational t0(Rational(3, 5));
  const Realization<GaussianRational> sampled(cfg, t0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> choices;
    const Op a = random_exact(rng, exact, choices);
    std::size_t pos = 0;
    const auto b = random_expr(rng, sampled, 3, choices, pos);
    EXPECT_EQ(a.meta(), b.meta());
    for (std::size_t c = 0; c < cfg.dim(); ++c) {
      const auto s = static_cast<StateIndex>(c);
      for (const auto& e : a.column(s)) {
        EXPECT_EQ(eval_at(e.value, t0), b.entry(e.target, s));
      }
      EXPECT_LE(b.column(s).size(), a.column(s).size());
      if (b.tainted(s)) {
        EXPECT_TRUE(a.tainted(s));
      }
    }
  }
}

TEST(FockProperties, GaugeConjugationPreservesRelations) {
  const ModeConfig cfg(1, 6);
  R r(cfg);
  std::vector<Rational> g;
  for (std::size_t s = 0; s < cfg.dim(); ++s) g.emplace_back(static_cast<int>(s) + 2, 3);
  r.set_gauge(g);
  const Op am = osc_minus(r, 1), ap = osc_plus(r, 1);
  EXPECT_EQ(am.entry(0, 1), Scalar(Rational(2, 3)));
  const Op lhs = compose(am, ap) - scale(r, kQ, compose(ap, am));
  EXPECT_EQ(equal_on_interior(lhs, identity(r), Margin::automatic()).outcome,
            Outcome::pass);
}

}  // namespace
}  // namespace qfock
