// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "core/bounds.hpp"
#include "core/errors.hpp"

using namespace abelos;

namespace {

BoundInput worked_instance(int ell) {
  auto w = weil_restriction(16, 31);
  auto rep = classify_no_low_genus(w, WeilRestrictionMeta{2, 16, 31});
  return make_bound_input(w, 2, 3, ell, &rep);
}

}  // namespace

TEST_CASE("code_dimension and relevance_threshold") {
  CHECK(code_dimension(3, 2) == 9);
  CHECK(code_dimension(5, 4) == 50);
  CHECK_THROWS_AS(code_dimension(3, 3), error);
  CHECK(relevance_threshold(2) == 24);
  CHECK(relevance_threshold(4) == 36);  // 4 (sqrt4 + 1)^2 exactly
  CHECK(relevance_threshold(6) == 48);  // ceil(28 + 8 sqrt6)
}

TEST_CASE("general bound on the worked instance") {
  auto in = worked_instance(1);
  auto res = bound_general(in);
  CHECK(res.n == 226);
  CHECK(res.k == 9);
  CHECK(res.d_lower == 4);
  CHECK(res.theorem == BoundTheorem::General);
  CHECK(res.injectivity_ok);
  // Galois refinement e = 2 halves the component cap
  BoundInput in2 = in;
  in2.galois_degree = 2;
  auto res2 = bound_general(in2);
  CHECK(res2.d_lower > res.d_lower);
  CHECK(res2.nf_bound == 3 * (16 + 1 - 0 + 8) + 9 * 8);
}

TEST_CASE("phi evaluates exactly on the axis") {
  auto in = worked_instance(2);
  auto p1 = phi(1, in);
  CHECK(p1.value == QuadExact(84) - QuadExact::sqrt_of(2));
  auto p2 = phi(2, in);
  CHECK(p2.value ==
        QuadExact(125) - QuadExact(50) * QuadExact::sqrt_of(2));
  // x = 3 has alpha = 3 - 3 sqrt2 < 0: outside the polygon
  CHECK_THROWS_AS(phi(3, in), error);
  CHECK_THROWS_AS(phi(0, in), error);
}

TEST_CASE("simple bound values and licensing") {
  auto in1 = worked_instance(1);
  auto s1 = bound_simple(in1);
  CHECK(s1.d_lower == 145);
  auto in2 = worked_instance(2);
  auto s2 = bound_simple(in2);
  CHECK(s2.d_lower == 144);
  CHECK(s2.winner == "phi(1)");
  CHECK(s2.theorem == BoundTheorem::SimpleEll);

  // ell above the licensed ceiling is refused
  auto w = weil_restriction(16, 31);
  auto rep = classify_no_low_genus(w, WeilRestrictionMeta{2, 16, 31});
  auto in3 = make_bound_input(w, 2, 3, 3, &rep);
  CHECK_FALSE(in3.ell_licensed);
  CHECK_THROWS_AS(bound_simple(in3), error);

  // the unsafe escape hatch works but watermarks
  auto in3u = make_bound_input(w, 2, 3, 3, &rep, 1, true);
  auto s3 = bound_simple(in3u);
  CHECK(s3.watermark_unsafe);
}

TEST_CASE("d_lower is the exact ceiling of n minus the irrational max") {
  // with M = 84 - sqrt2, ceil(226 - M) = 226 - floor(M) = 144
  auto in2 = worked_instance(2);
  auto s2 = bound_simple(in2);
  CHECK(s2.nf_bound == 82);
  CHECK(s2.d_lower == 226 - 82);
}

TEST_CASE("haloui specialization guards and piecewise branches") {
  auto in = worked_instance(1);
  auto hb = bound_haloui(in);
  // m = 8: r*m = 24 > q+1-t1-m = 9, second branch: 9 + 8*9 = 81
  CHECK(hb.nf_bound == 81);
  CHECK(hb.winner == "second-branch");
  CHECK(hb.d_lower == 145);
  BoundInput bad = in;
  bad.h2 = 4;
  CHECK_THROWS_AS(bound_haloui(bad), error);
  BoundInput bad2 = worked_instance(2);
  CHECK_THROWS_AS(bound_haloui(bad2), error);

  // first branch: big q, small r
  BoundInput fb;
  fb.q = 101;
  fb.t1 = 0;
  fb.num_points = point_count_surface({101, 0, 0});
  fb.h2 = 2;
  fb.r = 3;
  fb.ell = 1;
  fb.ell_licensed = true;
  auto h2b = bound_haloui(fb);  // m = 20, r*m = 60 <= 102 - 20
  CHECK(h2b.winner == "first-branch");
  CHECK(h2b.nf_bound == 3 * 102);
}

TEST_CASE("polygon brute force agrees with the closed form on samples") {
  for (std::uint32_t q : {5u, 9u, 16u}) {
    for (int ell : {1, 2, 3}) {
      BoundInput in;
      in.q = q;
      in.t1 = 1;
      in.num_points = 0;
      in.h2 = 4;
      in.r = 4;
      in.ell = ell;
      in.ell_licensed = true;
      auto cf = simple_closed_form_max(in);
      auto pm = polygon_max_bruteforce(in, PolygonObjective::TheoremPhi);
      CHECK(cf.value >= pm.value);
      auto sh = polygon_max_bruteforce(in, PolygonObjective::SharpenedEq13);
      CHECK(sh.value <= pm.value);
    }
  }
}

TEST_CASE("input validation") {
  auto w = weil_restriction(16, 31);
  CHECK_THROWS_AS(make_bound_input(w, 3, 3, 1, nullptr), error);  // odd H^2
  CHECK_THROWS_AS(make_bound_input(w, 2, 2, 1, nullptr), error);  // r < 3
  CHECK_THROWS_AS(make_bound_input(w, 2, 3, 0, nullptr), error);  // ell < 1
}

TEST_CASE("floor_sqrt_ratio") {
  CHECK(floor_sqrt_ratio(9, 1) == 3);
  CHECK(floor_sqrt_ratio(9, 2) == 2);
  CHECK(floor_sqrt_ratio(8, 2) == 2);
  CHECK(floor_sqrt_ratio(7, 2) == 1);
  CHECK(floor_sqrt_ratio(0, 5) == 0);
  CHECK_THROWS_AS(floor_sqrt_ratio(-1, 1), error);
}

TEST_CASE("compare_ell surveys the licensed and hypothetical rows") {
  auto in = worked_instance(1);
  auto cmp = compare_ell(in, {1, 2});
  REQUIRE(cmp.rows.size() == 2);
  CHECK(cmp.general.d_lower == 4);
  CHECK(cmp.rows[0].simple.d_lower == 145);
  CHECK(cmp.rows[1].simple.d_lower == 144);
  CHECK(cmp.best_ell == 1);
}
