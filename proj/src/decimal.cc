// Copyright 2026 The Lingua Authors
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

#include "lingua/decimal.h"

#include <algorithm>
#include <cctype>
#include <utility>

namespace lingua {
namespace {

BigInt Pow10(int n) {
  BigInt result = 1;
  for (int i = 0; i < n; ++i) result *= 10;
  return result;
}

// Brings both mantissas to the larger of the two scales.
std::pair<BigInt, BigInt> Align(const Decimal& a, const Decimal& b,
                                int* scale) {
  *scale = std::max(a.scale(), b.scale());
  return {a.mantissa() * Pow10(*scale - a.scale()),
          b.mantissa() * Pow10(*scale - b.scale())};
}

}  // namespace

Decimal::Decimal(long long value) : mantissa_(value), scale_(0) {}

Decimal Decimal::FromParts(BigInt mantissa, int scale) {
  Decimal d;
  d.mantissa_ = std::move(mantissa);
  d.scale_ = scale;
  if (d.scale_ < 0) {
    d.mantissa_ *= Pow10(-d.scale_);
    d.scale_ = 0;
  }
  d.Normalize();
  return d;
}

std::optional<Decimal> Decimal::Parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  BigInt mantissa = 0;
  int scale = 0;
  bool seen_point = false;
  bool digits_after_point = false;
  bool digits_before_point = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    mantissa = mantissa * 10 + (c - '0');
    if (seen_point) {
      ++scale;
      digits_after_point = true;
    } else {
      digits_before_point = true;
    }
  }
  if (!digits_before_point || (seen_point && !digits_after_point)) {
    return std::nullopt;
  }
  if (negative) mantissa = -mantissa;
  return FromParts(std::move(mantissa), scale);
}

void Decimal::Normalize() {
  if (mantissa_ == 0) {
    scale_ = 0;
    return;
  }
  while (scale_ > 0 && mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    --scale_;
  }
}

int Decimal::integer_digits() const {
  BigInt whole = boost::multiprecision::abs(mantissa_) / Pow10(scale_);
  int digits = 0;
  while (whole > 0) {
    whole /= 10;
    ++digits;
  }
  return digits;
}

Decimal Decimal::abs() const {
  return FromParts(boost::multiprecision::abs(mantissa_), scale_);
}

Decimal operator+(const Decimal& a, const Decimal& b) {
  int scale = 0;
  auto [x, y] = Align(a, b, &scale);
  return Decimal::FromParts(x + y, scale);
}

Decimal operator-(const Decimal& a, const Decimal& b) {
  int scale = 0;
  auto [x, y] = Align(a, b, &scale);
  return Decimal::FromParts(x - y, scale);
}

Decimal operator*(const Decimal& a, const Decimal& b) {
  return Decimal::FromParts(a.mantissa_ * b.mantissa_, a.scale_ + b.scale_);
}

Decimal Decimal::operator-() const { return FromParts(-mantissa_, scale_); }

Decimal Decimal::Divide(const Decimal& dividend, const Decimal& divisor,
                        int fraction_digits) {
  // dividend / divisor = (m1 * 10^(s2 + f)) / (m2 * 10^s1) * 10^-f
  BigInt numerator =
      dividend.mantissa_ * Pow10(divisor.scale_ + fraction_digits);
  BigInt denominator = divisor.mantissa_ * Pow10(dividend.scale_);
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  BigInt quotient = numerator / denominator;  // truncates toward zero
  BigInt remainder = numerator % denominator;
  if (remainder != 0) {
    BigInt twice = boost::multiprecision::abs(remainder) * 2;
    bool round_away = twice > denominator ||
                      (twice == denominator && quotient % 2 != 0);
    if (round_away) quotient += numerator < 0 ? -1 : 1;
  }
  return FromParts(std::move(quotient), fraction_digits);
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  int scale = 0;
  auto [x, y] = Align(a, b, &scale);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Decimal::ToString() const {
  std::string digits = BigInt(boost::multiprecision::abs(mantissa_)).str();
  if (scale_ > 0) {
    if (static_cast<int>(digits.size()) <= scale_) {
      digits.insert(0, scale_ - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - scale_, ".");
  }
  return mantissa_ < 0 ? "-" + digits : digits;
}

}  // namespace lingua
