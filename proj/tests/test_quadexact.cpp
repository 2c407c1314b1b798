// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "core/quadexact.hpp"

using namespace abelos;

TEST_CASE("radicands are kept squarefree canonically") {
  CHECK(QuadExact::sqrt_of(8) == QuadExact(2) * QuadExact::sqrt_of(2));
  CHECK(QuadExact::sqrt_of(4) == QuadExact(2));
  CHECK(QuadExact::sqrt_of(1) == QuadExact(1));
  CHECK(QuadExact::sqrt_of(0).is_zero());
  CHECK(QuadExact::sqrt_of(360) ==
        QuadExact(6) * QuadExact::sqrt_of(10));
}

TEST_CASE("arithmetic is exact") {
  QuadExact s2 = QuadExact::sqrt_of(2);
  QuadExact s3 = QuadExact::sqrt_of(3);
  CHECK(s2 * s2 == QuadExact(2));
  CHECK(s2 * s3 == QuadExact::sqrt_of(6));
  // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6
  QuadExact lhs = (s2 + s3) * (s2 + s3);
  QuadExact rhs = QuadExact(5) + QuadExact(2) * QuadExact::sqrt_of(6);
  CHECK(lhs == rhs);
  CHECK((s2 - s2).is_zero());
  CHECK((QuadExact::sqrt_of(8) - QuadExact(2) * s2).is_zero());
  CHECK(-(s2 - s3) == s3 - s2);
}

TEST_CASE("sign decides like the reals") {
  QuadExact s2 = QuadExact::sqrt_of(2);
  CHECK((s2 - QuadExact(1)).sign() == 1);
  CHECK((QuadExact(1) - s2).sign() == -1);
  CHECK(QuadExact().sign() == 0);
  // 3 - 2 sqrt2 > 0 but tiny-ish; 7 - 5 sqrt2 < 0 (7/5 < sqrt2)
  CHECK((QuadExact(3) - QuadExact(2) * s2).sign() == 1);
  CHECK((QuadExact(7) - QuadExact(5) * s2).sign() == -1);
  // sqrt2 + sqrt3 vs sqrt(10): 5 + 2 sqrt6 < 10
  CHECK(QuadExact::sqrt_of(2) + QuadExact::sqrt_of(3) <
        QuadExact::sqrt_of(10));
}

TEST_CASE("floor is exact, negatives included") {
  QuadExact s2 = QuadExact::sqrt_of(2);
  CHECK(s2.floor() == 1);
  CHECK((QuadExact(10) * s2).floor() == 14);
  CHECK((-s2).floor() == -2);
  CHECK(QuadExact(3).floor() == 3);
  CHECK(QuadExact(mpq_class(-7, 2)).floor() == -4);
  // 84 - sqrt2 in [82, 83)
  CHECK((QuadExact(84) - s2).floor() == 82);
}

TEST_CASE("rational detection and extraction") {
  CHECK(QuadExact(5).is_rational());
  CHECK(QuadExact(5).rational_part() == 5);
  CHECK_FALSE(QuadExact::sqrt_of(2).is_rational());
  CHECK(QuadExact::sqrt_of_rational(9, 4) == QuadExact(mpq_class(3, 2)));
  // sqrt(9/2) = 3 sqrt2 / 2
  CHECK(QuadExact::sqrt_of_rational(9, 2) ==
        QuadExact(mpq_class(3, 2)) * QuadExact::sqrt_of(2));
}

TEST_CASE("rendering") {
  QuadExact v = QuadExact(84) - QuadExact::sqrt_of(2);
  CHECK(v.to_string() == "84 - 1*sqrt(2)");
  // decimal enclosure of sqrt2 starts 1.41421356
  std::string d = QuadExact::sqrt_of(2).to_decimal(10);
  CHECK(d.substr(0, 10) == "1.41421356");
}
