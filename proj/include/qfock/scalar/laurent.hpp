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

#include <string>
#include <utility>
#include <vector>

#include "qfock/scalar/gaussian.hpp"

namespace qfock {

/// Laurent polynomial in t with Gaussian-rational coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are nonzero, and the zero polynomial stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(GaussianRational c)  // NOLINT(google-explicit-constructor)
      : LaurentPoly(monomial(std::move(c), 0)) {}
  LaurentPoly(std::int64_t c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT

  static LaurentPoly monomial(GaussianRational c, int exponent);
  /// Builds from coefficients of t^low, t^(low+1), ...; trims zeros.
  static LaurentPoly from_coefficients(int low,
                                       std::vector<GaussianRational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return low_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one();
  }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_real() const;

  /// Lowest and highest exponents present; both 0 for the zero polynomial.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// high() - low(); 0 for the zero polynomial.
  int span() const {
    return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
  }
  GaussianRational coefficient(int exponent) const;
  const GaussianRational& leading() const { return coeffs_.back(); }
  const GaussianRational& trailing() const { return coeffs_.front(); }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const GaussianRational& c) const;
  /// Divides by the leading coefficient.
  LaurentPoly monic() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Exact evaluation; throws DomainError at t0 = 0 with negative exponents.
  GaussianRational eval(const GaussianRational& t0) const;

  /// Polynomial long division of the t^0-aligned parts: returns (quotient,
  /// remainder) with both operands treated as ordinary polynomials after
  /// shifting their lowest exponent to zero. Throws DivisionByZero.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                                    const LaurentPoly& b);
  /// Exact quotient a / b in the Laurent ring; throws DomainError if b does
  /// not divide a.
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
  /// Monic gcd of the polynomial parts (powers of t are units and ignored).
  /// gcd(0, 0) = 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Human and parser-readable form, e.g. "t^8 - 2*t^4 + 1".
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<GaussianRational> coeffs_;
};

}  // namespace qfock
