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

#include "qifl/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qifl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<std::int64_t> to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational: zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
  Rational r;
  r.value_ = std::move(value);
  r.value_.canonicalize();
  return r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den.front() == '0') {
      return std::nullopt;
    }
    value = mpq_class(mpz_class(std::string(num), 10),
                      mpz_class(std::string(den), 10));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = mpq_class(mpz_class(std::string(text), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return from_mpq(std::move(value));
}

std::string Rational::numerator_string() const {
  return value_.get_num().get_str();
}

std::string Rational::denominator_string() const {
  return value_.get_den().get_str();
}

std::optional<std::int64_t> Rational::numerator_int64() const {
  return to_int64(value_.get_num());
}

std::optional<std::int64_t> Rational::denominator_int64() const {
  return to_int64(value_.get_den());
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::decimal(int places) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpq_class magnitude = abs(value_) * scale + mpq_class(1, 2);
  mpz_class rounded = magnitude.get_num() / magnitude.get_den();
  std::string digits = rounded.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<size_t>(places)) {
      digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<size_t>(places), ".");
  }
  if (sign() < 0 && rounded != 0) digits.insert(0, "-");
  return digits;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  // GMP raises SIGFPE on a zero divisor.
  if (other.is_zero()) throw std::domain_error("rational: division by zero");
  value_ /= other.value_;
  return *this;
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("ExtRational: value of +inf");
  return value_;
}

std::string ExtRational::str() const {
  return infinite_ ? "inf" : value_.str();
}

std::string ExtRational::decimal(int places) const {
  return infinite_ ? "inf" : value_.decimal(places);
}

double ExtRational::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity()
                   : value_.to_double();
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  return a.value_ <=> b.value_;
}

}  // namespace qifl
