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

#include "qfock/scalar/gaussian.hpp"

#include <ostream>

#include "qfock/error.hpp"

namespace qfock {

Rational GaussianRational::norm() const {
  if (im_.is_zero()) return re_ * re_;
  return re_ * re_ + im_ * im_;
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (im_.is_zero()) return GaussianRational(re_.inv());
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

GaussianRational operator+(const GaussianRational& a,
                           const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ + b.re_);
  return {a.re_ + b.re_, a.im_ + b.im_};
}

GaussianRational operator-(const GaussianRational& a,
                           const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ - b.re_);
  return {a.re_ - b.re_, a.im_ - b.im_};
}

GaussianRational operator*(const GaussianRational& a,
                           const GaussianRational& b) {
  if (a.im_.is_zero()) {
    if (b.im_.is_zero()) return GaussianRational(a.re_ * b.re_);
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) {
  re_ += b.re_;
  if (!b.im_.is_zero()) im_ += b.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& b) {
  re_ -= b.re_;
  if (!b.im_.is_zero()) im_ -= b.im_;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im_part;
  if (im_ == Rational(1)) {
    im_part = "i";
  } else if (im_ == Rational(-1)) {
    im_part = "-i";
  } else {
    im_part = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return im_part;
  if (im_part[0] == '-') return "(" + re_.to_string() + im_part + ")";
  return "(" + re_.to_string() + "+" + im_part + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

}  // namespace qfock
