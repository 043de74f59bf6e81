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

#include "qfock/scalar/scalar.hpp"

#include <ostream>

#include "qfock/error.hpp"

namespace qfock {
namespace {

LaurentPoly divide_out(const LaurentPoly& p, const LaurentPoly& g) {
  return g.is_one() ? p : LaurentPoly::exact_div(p, g);
}

int t_exponent_of_q(const Rational& k) {
  const Rational e = k * Rational(4);
  if (!e.is_integer() || !e.is_small()) {
    throw DomainError("q-exponent " + k.to_string() +
                      " is not a quarter-integer");
  }
  return static_cast<int>(e.numerator().get_si());
}

}  // namespace

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  Scalar s;
  if (num.is_zero()) return s;
  LaurentPoly n = num.shifted(-den.low());
  LaurentPoly d = den.shifted(-den.low());
  if (d.span() > 0) {
    const LaurentPoly g = LaurentPoly::gcd(n, d);
    n = divide_out(n, g);
    d = divide_out(d, g);
  }
  if (!d.leading().is_one()) {
    const GaussianRational c = d.leading().inv();
    n = n.scaled(c);
    d = d.scaled(c);
  }
  s.num_ = std::move(n);
  s.den_ = std::move(d);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  return fraction(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar s;
  if (a.den_.is_one() && b.den_.is_one()) {
    s.num_ = a.num_ + b.num_;
    return s;
  }
  // n/1 + m/d = (n d + m)/d is already reduced.
  if (a.den_.is_one() || b.den_.is_one()) {
    const Scalar& poly = a.den_.is_one() ? a : b;
    const Scalar& frac = a.den_.is_one() ? b : a;
    s.num_ = poly.num_ * frac.den_ + frac.num_;
    if (s.num_.is_zero()) return Scalar();
    s.den_ = frac.den_;
    return s;
  }
  if (a.den_ == b.den_) return Scalar::fraction(a.num_ + b.num_, a.den_);
  const LaurentPoly g = LaurentPoly::gcd(a.den_, b.den_);
  if (g.is_one()) {
    s.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    if (s.num_.is_zero()) return Scalar();
    s.den_ = a.den_ * b.den_;
    return s;
  }
  const LaurentPoly da = LaurentPoly::exact_div(a.den_, g);
  const LaurentPoly db = LaurentPoly::exact_div(b.den_, g);
  const LaurentPoly t = a.num_ * db + b.num_ * da;
  if (t.is_zero()) return Scalar();
  const LaurentPoly g2 = LaurentPoly::gcd(t, g);
  s.num_ = divide_out(t, g2);
  s.den_ = da * divide_out(b.den_, g2);
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  Scalar s;
  if (a.den_.is_one() && b.den_.is_one()) {
    s.num_ = a.num_ * b.num_;
    return s;
  }
  const LaurentPoly g1 =
      b.den_.is_one() ? LaurentPoly(1) : LaurentPoly::gcd(a.num_, b.den_);
  const LaurentPoly g2 =
      a.den_.is_one() ? LaurentPoly(1) : LaurentPoly::gcd(b.num_, a.den_);
  s.num_ = divide_out(a.num_, g1) * divide_out(b.num_, g2);
  s.den_ = divide_out(a.den_, g2) * divide_out(b.den_, g1);
  return s;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (!num_.is_monomial()) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

Scalar q_power(const Rational& k) { return Scalar::t_power(t_exponent_of_q(k)); }

Scalar qnum(int x) {
  if (x >= 0) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(x == 0 ? 0 : 4 * (x - 1) + 1));
    for (int j = 0; j < x; ++j) c[4 * j] = GaussianRational(1);
    return Scalar(LaurentPoly::from_coefficients(0, std::move(c)));
  }
  return Scalar::fraction(LaurentPoly(1) - LaurentPoly::monomial(1, 4 * x),
                          LaurentPoly(1) - LaurentPoly::monomial(1, 4));
}

Scalar qnum(const Rational& x) {
  if (x.is_integer() && x.is_small()) {
    return qnum(static_cast<int>(x.numerator().get_si()));
  }
  const int a = t_exponent_of_q(x);
  return Scalar::fraction(LaurentPoly(1) - LaurentPoly::monomial(1, a),
                          LaurentPoly(1) - LaurentPoly::monomial(1, 4));
}

Scalar qbracket(int x) { return qbracket(Rational(x), Rational(1)); }

Scalar qbracket(const Rational& x, const Rational& e) {
  if (e.is_zero()) throw DomainError("q-bracket base exponent must be nonzero");
  const int a = t_exponent_of_q(x * e);
  const int b = t_exponent_of_q(e);
  return Scalar::fraction(
      LaurentPoly::monomial(1, a) - LaurentPoly::monomial(1, -a),
      LaurentPoly::monomial(1, b) - LaurentPoly::monomial(1, -b));
}

GaussianRational eval_at(const Scalar& a, const GaussianRational& t0) {
  if (t0.is_zero()) throw DomainError("evaluation point t = 0");
  const GaussianRational d = a.den().eval(t0);
  if (d.is_zero()) {
    throw PoleError("denominator of " + a.to_string() + " vanishes at t = " +
                    t0.to_string());
  }
  const GaussianRational n = a.num().eval(t0);
  return d.is_one() ? n : n / d;
}

GaussianRational limit_at_one(const Scalar& a) {
  const GaussianRational one(1);
  const GaussianRational d = a.den().eval(one);
  if (d.is_zero()) {
    throw PoleError("pole at t = 1 in " + a.to_string());
  }
  return a.num().eval(one) / d;
}

std::pair<int, int> degree_bounds(const Scalar& a) {
  return {a.num().span(), a.den().span()};
}

}  // namespace qfock
