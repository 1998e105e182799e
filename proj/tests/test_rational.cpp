// Copyright 2026 The robsel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "robsel/prng.hpp"
#include "robsel/rational.hpp"

using robsel::Prng;
using robsel::Rational;

TEST_CASE("construction keeps lowest terms") {
  Rational r(6, 4);
  CHECK(r == Rational(3, 2));
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  CHECK(r.is_canonical());

  Rational neg(5, -10);
  CHECK(neg == Rational(-1, 2));
  CHECK(neg.denominator() == 2);
  CHECK(neg.is_canonical());
}

TEST_CASE("decimal string parsing is exact") {
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-4.25") == Rational(-17, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("+3.10") == Rational(31, 10));
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("-40/9") == Rational(-40, 9));
  CHECK(Rational::parse("0.000") == Rational(0));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1e5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("string rendering") {
  CHECK(Rational(5, 2).to_string() == "5/2");
  CHECK(Rational(-3).to_string() == "-3");
  CHECK(Rational(1, 2).to_decimal_string() == "0.5");
  CHECK(Rational(-17, 4).to_decimal_string() == "-4.25");
  CHECK(Rational(3, 40).to_decimal_string() == "0.075");
  CHECK(Rational(7).to_decimal_string() == "7");
  CHECK(Rational(1, 3).has_finite_decimal() == false);
  CHECK_THROWS_AS(Rational(1, 3).to_decimal_string(), std::domain_error);
  // Decimal rendering round-trips exactly.
  CHECK(Rational::parse(Rational(123, 8).to_decimal_string()) == Rational(123, 8));
}

TEST_CASE("arithmetic is exact and canonical on random values") {
  Prng rng(42);
  for (int it = 0; it < 500; ++it) {
    Rational a(rng.range(-50, 50), rng.range(1, 30));
    Rational b(rng.range(-50, 50), rng.range(1, 30));
    Rational s = a + b;
    CHECK(s - b == a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(s.is_canonical());
    CHECK((a * b).is_canonical());
  }
}

TEST_CASE("ordering and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(robsel::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(robsel::pos(Rational(-5)) == Rational(0));
  CHECK(robsel::pos(Rational(5, 3)) == Rational(5, 3));
  CHECK(robsel::floor(Rational(7, 2)) == Rational(3));
  CHECK(robsel::floor(Rational(-7, 2)) == Rational(-4));
  CHECK(robsel::ceil(Rational(7, 2)) == Rational(4));
  CHECK(robsel::abs(Rational(-7, 2)) == Rational(7, 2));
}
