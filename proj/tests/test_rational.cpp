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
#include <doctest.h>

#include <stdexcept>

#include "fuzzdist/rational.hpp"
#include "support/generators.hpp"

using fuzzdist::BigInt;
using fuzzdist::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).to_fraction_string() == "0");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and comparisons") {
  Rational a(3, 8), b(1, 4);
  CHECK(a + b == Rational(5, 8));
  CHECK(a - b == Rational(1, 8));
  CHECK(a * b == Rational(3, 32));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-3, 8));
  CHECK(Rational(-3, 8).abs() == a);
  CHECK(a < Rational(1, 2));
  CHECK(Rational(1, 3) > Rational(33, 100));
  CHECK(Rational::min(a, b) == b);
  CHECK(Rational::max(a, b) == a);
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("rational arithmetic round-trips on random small values") {
  testgen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(static_cast<long long>(rng.next(2001)) - 1000,
               1 + static_cast<long long>(rng.next(40)));
    Rational b(static_cast<long long>(rng.next(2001)) - 1000,
               1 + static_cast<long long>(rng.next(40)));
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK((a - b) + (b - a) == Rational(0));
  }
}

TEST_CASE("big values stay exact") {
  // 2^200 and friends: far past any machine word
  Rational big(1);
  const Rational two(2);
  for (int i = 0; i < 200; ++i) big = big * two;
  CHECK((big + Rational(1)) - big == Rational(1));
  CHECK(big / big == Rational(1));
  CHECK((Rational(1) / big) * big == Rational(1));
  CHECK(big.to_fraction_string() ==
        "1606938044258990275541962092341162602522202993782792835301376");

  BigInt g = BigInt::gcd(BigInt(123456789123456789LL), BigInt(987654321987654321LL));
  CHECK(g.to_string() == "9000000009");
}

TEST_CASE("floor") {
  CHECK(Rational(7, 2).floor().to_string() == "3");
  CHECK(Rational(-7, 2).floor().to_string() == "-4");
  CHECK(Rational(4).floor().to_string() == "4");
  CHECK(Rational(-4).floor().to_string() == "-4");
}

TEST_CASE("parsing accepts fractions, integers and exact decimals") {
  CHECK(*Rational::parse("3/8") == Rational(3, 8));
  CHECK(*Rational::parse("-3/8") == Rational(-3, 8));
  CHECK(*Rational::parse("7") == Rational(7));
  CHECK(*Rational::parse("-7") == Rational(-7));
  CHECK(*Rational::parse("0.375") == Rational(3, 8));
  CHECK(*Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("2.") == std::nullopt);
  CHECK(Rational::parse("") == std::nullopt);
  CHECK(Rational::parse("1/0") == std::nullopt);
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("1/-2") == std::nullopt);
  CHECK(Rational::parse("abc") == std::nullopt);
  CHECK(Rational::parse("1.2.3") == std::nullopt);
  CHECK(Rational::parse("--3") == std::nullopt);
  CHECK(Rational::parse("1e3") == std::nullopt);
}

TEST_CASE("fraction and decimal rendering") {
  CHECK(Rational(1, 2).to_fraction_string() == "1/2");
  CHECK(Rational(4, 2).to_fraction_string() == "2");
  CHECK(Rational(1, 4).to_decimal_string() == "0.25");
  CHECK(Rational(1, 64).to_decimal_string() == "0.015625");
  CHECK(Rational(3).to_decimal_string() == "3");
  CHECK(Rational(-3, 8).to_decimal_string() == "-0.375");
  CHECK(Rational(1, 10).to_decimal_string() == "0.1");
  CHECK(Rational(7, 50).to_decimal_string() == "0.14");
  // non-terminating decimals fall back to the exact fraction
  CHECK(Rational(1, 3).to_decimal_string() == "1/3");
  CHECK(Rational(9, 10).to_decimal_string() == "0.9");
}

TEST_CASE("parse/format round-trip on random values") {
  testgen::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(static_cast<long long>(rng.next(100000)) - 50000,
               1 + static_cast<long long>(rng.next(5000)));
    CHECK(*Rational::parse(a.to_fraction_string()) == a);
    CHECK(*Rational::parse(a.to_decimal_string()) == a);
  }
}
