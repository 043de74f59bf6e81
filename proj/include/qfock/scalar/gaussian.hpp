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

#include "qfock/scalar/rational.hpp"

namespace qfock {

/// Element re + i*im of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(std::int64_t re) : re_(re) {}         // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  Rational norm() const;
  GaussianRational inv() const;
  GaussianRational pow(int e) const;

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b);
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b);
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    return a * b.inv();
  }

  GaussianRational& operator+=(const GaussianRational& b);
  GaussianRational& operator-=(const GaussianRational& b);
  GaussianRational& operator*=(const GaussianRational& b) {
    return *this = *this * b;
  }

  friend bool operator==(const GaussianRational& a,
                         const GaussianRational& b) = default;

  /// "3/4", "-2*i", "(1/2+3*i)"; parseable by the expression language.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace qfock
