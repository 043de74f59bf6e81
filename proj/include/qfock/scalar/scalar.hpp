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

#include <iosfwd>
#include <string>
#include <utility>

#include "qfock/scalar/laurent.hpp"

namespace qfock {

/// Element of Q(i)(t), the field every operator entry lives in. The formal
/// variable is t = q^(1/4), so every q^(k/4) is an integer power of t.
///
/// Canonical form: numerator and denominator share no nonunit factor, the
/// denominator has a nonzero constant term (all powers of t are carried by
/// the numerator) and is monic. Equality is therefore structural.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  Scalar(GaussianRational c) : Scalar(LaurentPoly(std::move(c))) {}  // NOLINT
  Scalar(Rational c) : Scalar(GaussianRational(std::move(c))) {}     // NOLINT
  Scalar(std::int64_t c) : Scalar(LaurentPoly(c)) {}                 // NOLINT

  /// num / den in canonical form; throws DivisionByZero if den == 0.
  static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den);
  static Scalar t_power(int k) {
    return Scalar(LaurentPoly::monomial(GaussianRational(1), k));
  }
  static Scalar imaginary_unit() {
    return Scalar(GaussianRational::imaginary_unit());
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_real() const { return num_.is_real(); }
  /// A constant (t-free) value; returns it if so.
  bool is_constant() const { return den_.is_one() && num_.span() == 0 && num_.low() == 0; }
  GaussianRational constant_value() const { return num_.coefficient(0); }

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(int e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  /// "t^8", "(t^4 + 1)/(t^2 + 1)"; parseable by the expression language.
  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// q^k = t^(4k); throws DomainError unless 4k is an integer.
Scalar q_power(const Rational& k);
/// (x)_q = (1 - q^x) / (1 - q).
Scalar qnum(int x);
/// (x)_q for rational x with 4x integral.
Scalar qnum(const Rational& x);
/// [x]_q = (q^x - q^-x) / (q - q^-1).
Scalar qbracket(int x);
/// [x]_{q^e} = (q^(ex) - q^(-ex)) / (q^e - q^(-e)); requires 4ex and 4e
/// integral and e != 0.
Scalar qbracket(const Rational& x, const Rational& e = Rational(1));

/// Exact value at t = t0. Throws PoleError if the denominator vanishes and
/// DomainError at t0 = 0.
GaussianRational eval_at(const Scalar& a, const GaussianRational& t0);
/// lim_{t -> 1}; canonical form has already cancelled every removable
/// factor, so a vanishing denominator at 1 is a genuine pole (PoleError).
GaussianRational limit_at_one(const Scalar& a);
/// (span of numerator exponents, span of denominator exponents).
std::pair<int, int> degree_bounds(const Scalar& a);

}  // namespace qfock
