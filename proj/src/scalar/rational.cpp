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

#include "qfock/scalar/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "qfock/error.hpp"

namespace qfock {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -static_cast<i128>(kMax); }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1
               : static_cast<std::uint64_t>(v);
}

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  const u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(u),
                                  static_cast<std::uint64_t>(u >> 64)};
  mpz_class r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (neg) r = -r;
  return r;
}

bool mpz_to_int64(const mpz_class& z, std::int64_t* out) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  const long v = z.get_si();
  if (v == std::numeric_limits<long>::min()) return false;
  *out = v;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  *this = from_mpq(mpq_class(mpz_class(static_cast<long>(n)),
                             mpz_class(static_cast<long>(d))));
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  std::int64_t n = 0;
  std::int64_t d = 1;
  if (mpz_to_int64(q.get_num(), &n) && mpz_to_int64(q.get_den(), &d)) {
    r.num_ = n;
    r.den_ = d;
  } else {
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return r;
}

// n/d must already be reduced with d > 0.
Rational Rational::from_i128(i128 n, i128 d) {
  Rational r;
  if (fits(n) && d <= kMax) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  return from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw DomainError("malformed rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed rational literal");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        throw DomainError("malformed rational literal");
      }
    }
    return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return from_mpq(mpq_class(parse_int(text)));
  }
  mpz_class n = parse_int(text.substr(0, slash));
  mpz_class d = parse_int(text.substr(slash + 1));
  if (d == 0) throw DivisionByZero();
  return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return from_mpq(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.num_ == 0) return b;
  if (b.num_ == 0) return a;
  if (a.den_ == 1 && b.den_ == 1) {
    return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, 1);
  }
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(a.den_),
                                   static_cast<std::uint64_t>(b.den_));
  if (g == 1) {
    const i128 n = static_cast<i128>(a.num_) * b.den_ +
                   static_cast<i128>(b.num_) * a.den_;
    return Rational::from_i128(n, static_cast<i128>(a.den_) * b.den_);
  }
  const auto gs = static_cast<std::int64_t>(g);
  const i128 t = static_cast<i128>(a.num_) * (b.den_ / gs) +
                 static_cast<i128>(b.num_) * (a.den_ / gs);
  if (t == 0) return Rational();
  const u128 tabs = t < 0 ? -static_cast<u128>(t) : static_cast<u128>(t);
  const auto g2 = static_cast<std::int64_t>(
      std::gcd(static_cast<std::uint64_t>(tabs % g), g));
  return Rational::from_i128(t / g2,
                             static_cast<i128>(a.den_ / gs) * (b.den_ / g2));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  if (a.den_ == 1 && b.den_ == 1) {
    return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
  }
  const auto g1 = static_cast<std::int64_t>(
      std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
  const auto g2 = static_cast<std::int64_t>(
      std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
  const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  return Rational::from_i128(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.inv();
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

Rational Rational::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace qfock
