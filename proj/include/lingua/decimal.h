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

#ifndef LINGUA_DECIMAL_H_
#define LINGUA_DECIMAL_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lingua {

using BigInt = boost::multiprecision::cpp_int;

// An exact decimal number: mantissa * 10^-scale. Values are kept normalized
// (no trailing zero fraction digits, zero has scale 0), so structural
// equality coincides with numeric equality.
class Decimal {
 public:
  Decimal() = default;
  Decimal(long long value);  // NOLINT(google-explicit-constructor)
  static Decimal FromParts(BigInt mantissa, int scale);

  // Accepts an optional leading '-', digits, and an optional '.' followed by
  // at least one digit. Returns nullopt for anything else.
  static std::optional<Decimal> Parse(std::string_view text);

  const BigInt& mantissa() const { return mantissa_; }
  int scale() const { return scale_; }

  bool is_zero() const { return mantissa_ == 0; }
  bool is_negative() const { return mantissa_ < 0; }
  bool is_integer() const { return scale_ == 0; }

  // Digits left of the decimal point, not counting a lone leading zero.
  int integer_digits() const;
  int fraction_digits() const { return scale_; }

  Decimal abs() const;

  friend Decimal operator+(const Decimal& a, const Decimal& b);
  friend Decimal operator-(const Decimal& a, const Decimal& b);
  friend Decimal operator*(const Decimal& a, const Decimal& b);
  Decimal operator-() const;

  // Quotient rounded half-to-even at `fraction_digits` places.
  // Precondition: divisor is nonzero.
  static Decimal Divide(const Decimal& dividend, const Decimal& divisor,
                        int fraction_digits);

  friend bool operator==(const Decimal& a, const Decimal& b) = default;
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

  std::string ToString() const;

 private:
  void Normalize();

  BigInt mantissa_ = 0;
  int scale_ = 0;
};

}  // namespace lingua

#endif  // LINGUA_DECIMAL_H_
