/*
 * Copyright 2026 The fuzzdist authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef FUZZDIST_RATIONAL_HPP
#define FUZZDIST_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzdist {

/** Arbitrary-precision signed integer, little-endian base-2^32 magnitude. */
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncating division: num = q*den + r with |r| < |den| and sign(r) = sign(num).
  static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt pow10(unsigned k);

  // -1, 0, +1 as a < b, a == b, a > b.
  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  std::string to_string() const;
  // Parses an optionally signed run of decimal digits; nullopt on anything else.
  static std::optional<BigInt> parse(std::string_view s);

  bool fits_int64() const;
  long long to_int64() const;  // precondition: fits_int64()
  double to_double() const;

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // no leading zero limbs; empty iff zero

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // precondition: a >= b
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& num,
                         const std::vector<std::uint32_t>& den,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

/**
 * Exact rational number, always normalized: denominator > 0, gcd(num, den) = 1,
 * zero is 0/1. All level coordinates in this project go through this type so
 * every comparison and every reported distance is exact.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num, long long den = 1);
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator-() const;
  Rational abs() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  static int compare(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  static const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
  static const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

  // Largest integer k with k <= a/b semantics: floor of this rational.
  BigInt floor() const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_fraction_string() const;
  /// Exact finite decimal when the denominator is of the form 2^a * 5^b
  /// ("1/4" -> "0.25"); falls back to the fraction form otherwise.
  std::string to_decimal_string() const;
  double to_double() const;

  /// Accepts "p/q", "p", and finite decimals like "0.375" / "-1.5".
  /// Every accepted form parses exactly; returns nullopt otherwise.
  static std::optional<Rational> parse(std::string_view s);

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

}  // namespace fuzzdist

#endif  // FUZZDIST_RATIONAL_HPP
