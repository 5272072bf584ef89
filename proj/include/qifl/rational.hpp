// Copyright 2026 The qifl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QIFL_RATIONAL_HPP_
#define QIFL_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace qifl {

// Exact rational number in canonical form (positive denominator, reduced).
// Backed by GMP so that products of many small fractions never overflow.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error if `denominator` is zero.
  Rational(long numerator, long denominator);

  static Rational from_mpq(mpq_class value);

  // Parses "a", "a/b" or a terminating decimal "a.bcd" exactly. Returns
  // nullopt on anything outside that grammar (including a zero denominator).
  static std::optional<Rational> parse(std::string_view text);

  const mpq_class& mpq() const { return value_; }

  std::string numerator_string() const;
  std::string denominator_string() const;
  // Numerator/denominator as int64 when they fit.
  std::optional<std::int64_t> numerator_int64() const;
  std::optional<std::int64_t> denominator_int64() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  // "a" when the denominator is 1, otherwise "a/b".
  std::string str() const;
  double to_double() const { return value_.get_d(); }
  // Fixed-point rendering with `places` digits after the point.
  std::string decimal(int places = 4) const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return from_mpq(-a.value_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class value_{0};
};

// A rational or +infinity. Capacities are +inf exactly when some column pairs
// a zero entry with a nonzero one.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value)  // NOLINT(google-explicit-constructor)
      : value_(std::move(value)) {}
  ExtRational(long value) : value_(value) {}  // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Throws std::logic_error when infinite.
  const Rational& value() const;

  std::string str() const;
  std::string decimal(int places = 4) const;
  double to_double() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
    return os << r.str();
  }

 private:
  bool infinite_ = false;
  Rational value_;
};

}  // namespace qifl

#endif  // QIFL_RATIONAL_HPP_
