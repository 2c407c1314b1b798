// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numeric>

#include "core/productlab.hpp"

using namespace abelos;

TEST_CASE("Riemann-Roch basis of L(rO) on an elliptic curve") {
  auto b3 = rr_basis_elliptic(3);
  REQUIRE(b3.monomials.size() == 3);
  CHECK(b3.monomials[0].pole_order() == 0);  // 1
  CHECK(b3.monomials[1].pole_order() == 2);  // x
  CHECK(b3.monomials[2].pole_order() == 3);  // y
  auto b5 = rr_basis_elliptic(5);
  REQUIRE(b5.monomials.size() == 5);
  CHECK(b5.monomials[3].pole_order() == 4);  // x^2
  CHECK(b5.monomials[4].pole_order() == 5);  // x y
  // pole orders are pairwise distinct
  for (std::size_t i = 1; i < b5.monomials.size(); ++i)
    CHECK(b5.monomials[i].pole_order() > b5.monomials[i - 1].pole_order());
}

TEST_CASE("Laurent leading coefficient vanishes iff pole order < r") {
  auto F = Field::make(5, 1);
  EllipticCurveModel E(F, 1, 2, 3, 4, 1);
  for (int r = 3; r <= 6; ++r) {
    for (auto mono : rr_basis_elliptic(r).monomials) {
      Field::elt c = laurent_leading_coeff(E, mono, r);
      if (mono.pole_order() == r)
        CHECK(c != 0);
      else
        CHECK(c == 0);
    }
  }
}

TEST_CASE("build_code shapes: punctured vs full") {
  auto F = Field::make(3, 1);
  EllipticCurveModel E1(F, 0, 0, 0, 1, 1);  // y^2 = x^3 + x + 1
  EllipticCurveModel E2(F, 0, 0, 0, 2, 1);  // y^2 = x^3 + 2x + 1

  auto cp = build_code(E1, E2, 3, EvalMode::Punctured);
  CHECK(cp.k == 9);
  CHECK(cp.n == (cp.count_e1 - 1) * (cp.count_e2 - 1));
  for (const auto& pp : cp.points) {
    CHECK_FALSE(pp.at_inf1);
    CHECK_FALSE(pp.at_inf2);
  }

  auto cf = build_code(E1, E2, 3, EvalMode::Full);
  CHECK(cf.n == cp.count_e1 * cp.count_e2);
  CHECK(cf.points.front().at_inf1);
  CHECK(cf.points.front().at_inf2);
  // trace bookkeeping: #E = q + 1 - t
  CHECK(cf.count_e1 == 3 + 1 - cf.trace_e1);
  CHECK(cf.count_e2 == 3 + 1 - cf.trace_e2);
}

TEST_CASE("build_code input validation") {
  auto F3 = Field::make(3, 1);
  auto F5 = Field::make(5, 1);
  EllipticCurveModel E1(F3, 0, 0, 0, 1, 1);
  EllipticCurveModel E2(F5, 0, 0, 0, 1, 1);
  CHECK_THROWS_AS(build_code(E1, E2, 3, EvalMode::Punctured), error);
  EllipticCurveModel E3(F3, 0, 0, 0, 2, 1);
  CHECK_THROWS_AS(build_code(E1, E3, 2, EvalMode::Punctured), error);
}

TEST_CASE("measure: exact distance, histogram, and the N(f) identity") {
  auto F = Field::make(3, 1);
  EllipticCurveModel E1(F, 0, 0, 0, 1, 1);
  EllipticCurveModel E2(F, 0, 0, 0, 2, 1);
  auto code = build_code(E1, E2, 3, EvalMode::Full);
  auto meas = measure(code);
  REQUIRE(meas.exact);
  CHECK(meas.rank <= 9);
  CHECK(meas.d >= 1);
  CHECK(meas.d <= code.n - meas.rank + 1);  // Singleton
  if (meas.injective) CHECK(meas.d == code.n - meas.max_nf);
  // histogram covers all q^k messages except the zero message
  std::uint64_t total = std::accumulate(meas.weight_histogram.begin(),
                                        meas.weight_histogram.end(),
                                        std::uint64_t{0});
  std::uint64_t expect = 1;
  for (int i = 0; i < 9; ++i) expect *= 3;
  CHECK(total == expect - 1);

  // a tiny cap forces a rank-only measurement, not an error
  auto rank_only = measure(code, 10);
  CHECK_FALSE(rank_only.exact);
  CHECK(rank_only.rank == meas.rank);
}

TEST_CASE("check_against_bounds accepts a sane measurement") {
  auto F = Field::make(5, 1);
  EllipticCurveModel E1(F, 0, 0, 0, 1, 1);
  EllipticCurveModel E2(F, 0, 0, 0, 3, 2);
  auto code = build_code(E1, E2, 3, EvalMode::Punctured);
  auto meas = measure(code);
  REQUIRE(meas.exact);
  auto rep = check_against_bounds(code, meas);
  CHECK(rep.n == code.n);
  CHECK(rep.checks.dist_ok);
  CHECK(rep.checks.nf_cap_ok);
  CHECK(rep.max_nf <= rep.nf_cap);

  // a falsified measurement is rejected with a bound violation
  auto bad = meas;
  bad.max_nf = rep.nf_cap + 1;
  CHECK_THROWS_AS(check_against_bounds(code, bad), error);
}
