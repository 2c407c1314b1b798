// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <memory>

#include "core/curves.hpp"
#include "core/isogeny.hpp"

using namespace abelos;

TEST_CASE("singular Weierstrass models are rejected") {
  auto F = Field::make(5, 1);
  // y^2 = x^3: discriminant 0
  CHECK_THROWS_AS(EllipticCurveModel(F, 0, 0, 0, 0, 0), error);
  // y^2 = x^3 - 3x + 2 = (x-1)^2 (x+2)
  CHECK_THROWS_AS(EllipticCurveModel(F, 0, 0, 0, F->from_int(-3), 2), error);
}

TEST_CASE("elliptic counting: recurrence agrees with exhaustive") {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    auto F = Field::make(p, n);
    const std::int64_t q = F->q();
    int seen = 0;
    for (Field::elt a4 = 0; a4 < F->q() && seen < 6; ++a4)
      for (Field::elt a6 = 0; a6 < F->q() && seen < 6; ++a6) {
        std::unique_ptr<EllipticCurveModel> E;
        try {
          E = std::make_unique<EllipticCurveModel>(F, 1, 0, 0, a4, a6);
        } catch (const error&) {
          continue;
        }
        ++seen;
        for (std::uint32_t d = 1; d <= 3; ++d) {
          auto exh = count_points_elliptic(*E, d, CountMode::Exhaustive);
          auto rec = count_points_elliptic(*E, d, CountMode::Recurrence);
          CHECK(exh == rec);
        }
        std::int64_t t = q + 1 - count_points_elliptic(*E, 1);
        CHECK(t * t <= 4 * q);  // Hasse
      }
    CHECK(seen > 0);
  }
}

TEST_CASE("quadratic twist negates the trace (odd q)") {
  auto F = Field::make(7, 1);
  // c = 3 is a non-residue mod 7 (squares are 1, 2, 4)
  const Field::elt c = 3;
  for (Field::elt a = 0; a < 7; ++a)
    for (Field::elt b = 0; b < 7; ++b) {
      std::unique_ptr<EllipticCurveModel> E, T;
      try {
        E = std::make_unique<EllipticCurveModel>(F, 0, 0, 0, a, b);
        // twist: y^2 = x^3 + a c^2 x + b c^3
        T = std::make_unique<EllipticCurveModel>(
            F, 0, 0, 0, F->mul(a, F->mul(c, c)),
            F->mul(b, F->mul(c, F->mul(c, c))));
      } catch (const error&) {
        continue;
      }
      std::int64_t tE = 8 - count_points_elliptic(*E, 1);
      std::int64_t tT = 8 - count_points_elliptic(*T, 1);
      CHECK(tE == -tT);
    }
}

TEST_CASE("exhaustive counting refuses fields beyond the cap") {
  auto F = Field::make(2, 10);
  EllipticCurveModel E(F, 0, 0, 1, 0, 1);  // y^2 + y = x^3 + 1, nonsingular
  CHECK_THROWS_AS(count_points_elliptic(E, 3, CountMode::Exhaustive), error);
}

TEST_CASE("genus-2 smoothness checks") {
  auto F5 = Field::make(5, 1);
  // y^2 = x^5: 4f has a quintuple root
  CHECK_THROWS_AS(Genus2CurveModel(F5, {0, 0, 0, 0, 0, 1}, {}), error);
  // y^2 = x^5 + 1 is fine away from characteristic 5 issues
  auto F7 = Field::make(7, 1);
  CHECK_NOTHROW(Genus2CurveModel(F7, {1, 0, 0, 0, 0, 1}, {}));
  // char 2 requires h != 0
  auto F2 = Field::make(2, 1);
  CHECK_THROWS_AS(Genus2CurveModel(F2, {1, 0, 0, 0, 0, 1}, {}), error);
  CHECK_NOTHROW(Genus2CurveModel(F2, {0, 1, 0, 0, 0, 1}, {1}));
}

TEST_CASE("y^2 = x^5 + 1 over F_7 reproduces the known Jacobian") {
  auto F7 = Field::make(7, 1);
  Genus2CurveModel C(F7, {1, 0, 0, 0, 0, 1}, {});
  std::int64_t n1 = count_points_genus2(C, 1);
  std::int64_t n2 = count_points_genus2(C, 2);
  CHECK(n1 == 8);
  CHECK(n2 == 50);
  auto w = weil_data_from_counts(7, n1, n2);
  CHECK(w.t1 == 0);
  CHECK(w.t2 == 0);
  CHECK(point_count_surface(w) == 50);
  CHECK((n2 + n1 * n1) / 2 - 7 == 50);
}

TEST_CASE("degree-6 genus-2 counts include the right infinity points") {
  auto F5 = Field::make(5, 1);
  // y^2 = x^6 + 2: leading coefficient 1, y^2 = 1 has two roots, so two
  // points at infinity on the smooth model
  Genus2CurveModel C(F5, {2, 0, 0, 0, 0, 0, 1}, {});
  std::int64_t affine = 0;
  for (Field::elt x = 0; x < 5; ++x) {
    Field::elt rhs = F5->add(F5->eval_poly({0, 0, 0, 0, 0, 0, 1}, x), 2);
    affine += F5->count_quadratic_roots(0, rhs);
  }
  CHECK(count_points_genus2(C, 1) == affine + F5->count_quadratic_roots(0, 1));
}

TEST_CASE("weil_data_from_counts rejects inconsistent counts") {
  CHECK_THROWS_AS(weil_data_from_counts(7, 100, 50), error);
}
