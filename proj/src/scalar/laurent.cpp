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

#include "qfock/scalar/laurent.hpp"

#include <algorithm>

#include "qfock/error.hpp"

namespace qfock {

LaurentPoly LaurentPoly::monomial(GaussianRational c, int exponent) {
  LaurentPoly p;
  if (c.is_zero()) return p;
  p.low_ = exponent;
  p.coeffs_.push_back(std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low,
                                           std::vector<GaussianRational> c) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(c);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const GaussianRational& c) { return !c.is_zero(); });
  if (first != coeffs_.begin()) {
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentPoly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const GaussianRational& c) { return c.is_real(); });
}

GaussianRational LaurentPoly::coefficient(int exponent) const {
  const int k = exponent - low_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[k];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

LaurentPoly LaurentPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inv());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.low_, b.low_);
  const int high = std::max(a.high(), b.high());
  std::vector<GaussianRational> c(static_cast<std::size_t>(high - low + 1));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    c[a.low_ - low + k] = a.coeffs_[k];
  }
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    c[b.low_ - low + k] += b.coeffs_[k];
  }
  return LaurentPoly::from_coefficients(low, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.scaled(a.coeffs_[0]).shifted(a.low_);
  if (b.is_monomial()) return a.scaled(b.coeffs_[0]).shifted(b.low_);
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(c));
}

GaussianRational LaurentPoly::eval(const GaussianRational& t0) const {
  if (is_zero()) return {};
  if (t0.is_zero()) {
    if (low_ < 0) throw DomainError("negative power of t evaluated at t = 0");
    return low_ == 0 ? coeffs_[0] : GaussianRational();
  }
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t0 + *it;
  }
  return low_ == 0 ? acc : acc * t0.pow(low_);
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a,
                                                        const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  std::vector<GaussianRational> r = a.coeffs_;
  const std::vector<GaussianRational>& d = b.coeffs_;
  if (r.size() < d.size()) return {{}, a.shifted(-a.low_)};
  const std::size_t qn = r.size() - d.size() + 1;
  std::vector<GaussianRational> quot(qn);
  const bool monic = d.back().is_one();
  const GaussianRational lead_inv = monic ? GaussianRational(1) : d.back().inv();
  for (std::size_t k = qn; k-- > 0;) {
    const GaussianRational& top = r[k + d.size() - 1];
    if (top.is_zero()) continue;
    GaussianRational f = monic ? top : top * lead_inv;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!d[j].is_zero()) r[k + j] -= f * d[j];
    }
    quot[k] = std::move(f);
  }
  r.resize(d.size() - 1);
  return {from_coefficients(0, std::move(quot)),
          from_coefficients(0, std::move(r))};
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    return a.scaled(b.coeffs_[0].inv()).shifted(-b.low_);
  }
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q.shifted(a.low_ - b.low_);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.shifted(-a.low_);
  LaurentPoly y = b.shifted(-b.low_);
  if (x.is_zero()) return y.monic();
  if (y.is_zero()) return x.monic();
  if (x.is_monomial() || y.is_monomial()) return LaurentPoly(1);
  if (x.span() < y.span()) std::swap(x, y);
  y = y.monic();
  while (!y.is_zero()) {
    if (y.span() == 0) return LaurentPoly(1);
    LaurentPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.shifted(-r.low_).monic();
  }
  return x.monic();
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const GaussianRational& c = coeffs_[e - low_];
    if (c.is_zero()) continue;
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      const Rational mag = c.re().abs();
      if (!(mag.is_one() && e != 0)) coef = mag.to_string();
    } else if (c.re().is_zero()) {
      negative = c.im().sign() < 0;
      const Rational mag = c.im().abs();
      coef = mag.is_one() ? "i" : mag.to_string() + "*i";
    } else {
      coef = c.to_string();
    }
    std::string mono;
    if (e == 1) {
      mono = "t";
    } else if (e != 0) {
      mono = "t^" + std::to_string(e);
    }
    std::string term = coef;
    if (!coef.empty() && !mono.empty()) term += "*";
    term += mono;
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace qfock
