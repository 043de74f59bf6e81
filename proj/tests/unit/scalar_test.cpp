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
#include "qfock/scalar/scalar.hpp"

namespace qfock {
namespace {

const Scalar kT = Scalar::t_power(1);
const Scalar kQ = Scalar::t_power(4);

LaurentPoly random_poly(std::mt19937_64& rng, bool complex) {
  std::uniform_int_distribution<int> len(1, 4), low(-3, 3), coef(-5, 5),
      den(1, 4);
  std::vector<GaussianRational> c;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    Rational re(coef(rng), den(rng));
    Rational im = complex ? Rational(coef(rng), den(rng)) : Rational(0);
    c.emplace_back(re, im);
  }
  return LaurentPoly::from_coefficients(low(rng), std::move(c));
}

Scalar random_scalar(std::mt19937_64& rng, bool complex = false) {
  LaurentPoly d;
  do {
    d = random_poly(rng, complex);
  } while (d.is_zero());
  return Scalar::fraction(random_poly(rng, complex), d);
}

TEST(Rational, SmallAndBigAgree) {
  const Rational big = Rational(3).pow(80);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big / Rational(3).pow(79), Rational(3));
  EXPECT_TRUE((big / Rational(3).pow(79)).is_small());
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(-4, 6), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational::parse("1/x"), DomainError);
}

TEST(Rational, OverflowPromotesExactly) {
  const Rational a(std::numeric_limits<std::int64_t>::max() - 1, 3);
  const Rational b(std::numeric_limits<std::int64_t>::max() - 3, 7);
  const mpq_class expect = a.to_mpq() * b.to_mpq() + a.to_mpq();
  EXPECT_EQ((a * b + a).to_mpq(), expect);
  EXPECT_EQ((a * b + a) - a * b, a);
}

TEST(ScalarOps, AdditiveInverse) { EXPECT_TRUE((kT + (-kT)).is_zero()); }

TEST(ScalarOps, MultiplicativeInverse) {
  const Scalar one_minus_q = Scalar(1) - kQ;
  EXPECT_EQ(one_minus_q.inv() * one_minus_q, Scalar(1));
}

TEST(ScalarOps, InverseIsCanonical) {
  const Scalar x = kT * kT + Scalar(1);
  const Scalar r = x.inv();
  EXPECT_EQ(x * r, Scalar(1));
  EXPECT_TRUE(r.num().is_one());
  EXPECT_EQ(r.den(), x.num());
  EXPECT_EQ(r.to_string(), "1/(t^2 + 1)");
}

TEST(ScalarOps, InverseOfZeroThrows) {
  EXPECT_THROW(Scalar().inv(), DivisionByZero);
}

TEST(ScalarOps, QPower) {
  EXPECT_EQ(q_power(Rational(1)), Scalar::t_power(4));
  EXPECT_EQ(q_power(Rational(-1, 2)), Scalar::t_power(-2));
  EXPECT_EQ(q_power(Rational(1, 4)), kT);
  EXPECT_THROW(q_power(Rational(1, 3)), DomainError);
}

TEST(ScalarOps, QNumbers) {
  EXPECT_TRUE(qnum(0).is_zero());
  EXPECT_EQ(qnum(2), Scalar(1) + kQ);
  // (q^2 - q^-2)/(q - q^-1) = q + q^-1 by polynomial division.
  EXPECT_EQ(qbracket(2), kQ + kQ.inv());
  for (int x = -6; x <= 6; ++x) {
    EXPECT_EQ(qbracket(-x), -qbracket(x));
    EXPECT_EQ(qnum(x), (Scalar(1) - kQ.pow(x)) / (Scalar(1) - kQ));
  }
  for (int x = 0; x <= 6; ++x) {
    Scalar geometric;
    for (int j = 0; j < x; ++j) geometric += kQ.pow(j);
    EXPECT_EQ(qnum(x), geometric);
  }
}

TEST(ScalarOps, QNumberConsistency) {
  // (x)_q = q^((x-1)/2) [x]_{q^(1/2)}, and (x)_{q^2} = q^(x-1) [x]_q.
  for (int x = -7; x <= 7; ++x) {
    EXPECT_EQ(qnum(Rational(x)),
              q_power(Rational(x - 1, 2)) * qbracket(Rational(x), Rational(1, 2)))
        << x;
    const Scalar q2num = (Scalar(1) - kQ.pow(2 * x)) / (Scalar(1) - kQ.pow(2));
    EXPECT_EQ(q2num, kQ.pow(x - 1) * qbracket(x)) << x;
  }
}

TEST(ScalarOps, EvalAt) {
  const Scalar f = (Scalar(1) - kQ).inv();
  // q = (1/2)^4 = 1/16, so 1/(1 - 1/16) = 16/15.
  EXPECT_EQ(eval_at(f, Rational(1, 2)), GaussianRational(Rational(16, 15)));
  EXPECT_EQ(eval_at(kT.pow(3), 2), GaussianRational(8));
  EXPECT_THROW(eval_at((kT - Scalar(1)).inv(), 1), PoleError);
  EXPECT_THROW(eval_at(kT, 0), DomainError);
}

TEST(ScalarOps, LimitAtOne) {
  const Scalar f = (Scalar(1) - kQ) / (Scalar(1) - kQ * kQ);
  EXPECT_EQ(limit_at_one(f), GaussianRational(Rational(1, 2)));
  EXPECT_EQ(limit_at_one(qnum(3)), GaussianRational(3));
  EXPECT_THROW(limit_at_one((Scalar(1) - kQ).inv()), PoleError);
  for (int x = -8; x <= 8; ++x) {
    EXPECT_EQ(limit_at_one(qbracket(x)), GaussianRational(x));
  }
}

TEST(ScalarOps, DegreeBounds) {
  EXPECT_EQ(degree_bounds(kT.pow(3) + kT.inv()), std::make_pair(4, 0));
  EXPECT_EQ(degree_bounds((Scalar(1) - kQ).inv()), std::make_pair(0, 4));
  EXPECT_EQ(degree_bounds(Scalar()), std::make_pair(0, 0));
}

TEST(ScalarOps, Rendering) {
  EXPECT_EQ((kQ.pow(2)).to_string(), "t^8");
  EXPECT_EQ((kQ * kQ - Scalar(2) * kQ + Scalar(1)).to_string(),
            "t^8 - 2*t^4 + 1");
  EXPECT_EQ((Scalar(Rational(1, 2)) * kT.pow(-3)).to_string(), "1/2*t^-3");
  EXPECT_EQ((Scalar::imaginary_unit() * kT).to_string(), "i*t");
  EXPECT_EQ((Scalar(1) - kQ).inv().to_string(), "-1/(t^4 - 1)");
}

TEST(ScalarProperties, FieldLaws) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const bool complex = trial % 4 == 0;
    const Scalar a = random_scalar(rng, complex);
    const Scalar b = random_scalar(rng, complex);
    const Scalar c = random_scalar(rng, complex);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), Scalar(1));
    }
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(ScalarProperties, Canonicality) {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const Scalar again = Scalar::fraction(a.num(), a.den());
    EXPECT_EQ(again, a);
    EXPECT_EQ(a.den().low(), 0);
    EXPECT_TRUE(a.den().leading().is_one());
    EXPECT_TRUE(LaurentPoly::gcd(a.num(), a.den()).is_one() || a.is_zero());
    const bool cross = a.num() * b.den() == b.num() * a.den();
    EXPECT_EQ(a == b, cross);
    // A scaled representative reduces to the same canonical value.
    const LaurentPoly k = random_poly(rng, false);
    if (!k.is_zero()) {
      EXPECT_EQ(Scalar::fraction(a.num() * k, a.den() * k), a);
    }
  }
}

TEST(ScalarProperties, EvaluationHomomorphism) {
  std::mt19937_64 rng(99);
  const GaussianRational points[] = {Rational(2, 3), Rational(-5, 7),
                                     GaussianRational(Rational(1, 2), Rational(3))};
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar a = random_scalar(rng, trial % 3 == 0);
    const Scalar b = random_scalar(rng);
    for (const auto& t0 : points) {
      try {
        const GaussianRational ea = eval_at(a, t0);
        const GaussianRational eb = eval_at(b, t0);
        EXPECT_EQ(eval_at(a * b, t0), ea * eb);
        EXPECT_EQ(eval_at(a + b, t0), ea + eb);
      } catch (const PoleError&) {
      }
    }
  }
}

TEST(ScalarProperties, RealInputsStayReal) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    EXPECT_TRUE((a * b + a).is_real());
    if (!b.is_zero()) {
      EXPECT_TRUE((a / b).is_real());
    }
  }
}

}  // namespace
}  // namespace qfock
