/* Copyright 2026 The chevalley authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "chevalley/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace chevalley {

__extension__ using wide = __int128;

namespace {

std::int64_t narrow(wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::Overflow, "rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

wide gcd128(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(wide n, wide d) {
  if (d == 0) throw Error(ErrorKind::InvalidParam, "division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  wide g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow");
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidParam, "zero denominator");
  if (d < 0) {
    if (n == INT64_MIN || d == INT64_MIN) throw Error(ErrorKind::Overflow, "rational overflow");
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  num_ = g > 1 ? n / g : n;
  den_ = g > 1 ? d / g : d;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  return Rational(r, den_);
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw Error(ErrorKind::Overflow, "rational overflow");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = make_reduced(wide(num_) + o.num_, den_);
  return *this = make_reduced(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = make_reduced(wide(num_) * o.num_, wide(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorKind::InvalidParam, "division by zero");
  return *this = make_reduced(wide(num_) * o.den_, wide(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  return Rational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string Gaussian::str() const {
  if (im.is_zero()) return re.str();
  std::string imag = im.str() + "i";
  if (re.is_zero()) return imag;
  if (im.sign() > 0) return re.str() + "+" + imag;
  return re.str() + imag;
}

// Accepts "a", "a/b", "ci", "c/di", "i", "-i", "a+ci", "a/b-c/di".
Gaussian Gaussian::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty number");
  if (s.back() != 'i') return Gaussian(Rational::parse(s));
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) {
    t = trim(t);
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return Rational::parse(t);
  };
  if (split == std::string_view::npos) return Gaussian(Rational(0), imag_part(body));
  return Gaussian(Rational::parse(body.substr(0, split)), imag_part(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

}  // namespace chevalley
