// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "core/errors.hpp"
#include "core/isogeny.hpp"

using namespace abelos;

TEST_CASE("validate_weil_surface accepts and rejects correctly") {
  CHECK(validate_weil_surface(16, 0, -31));
  CHECK(validate_weil_surface(7, 0, -7));
  CHECK(validate_weil_surface(2, 0, -4));   // double roots at the boundary
  CHECK(validate_weil_surface(4, 8, 24));   // t = sqrt(q) fourfold
  CHECK_FALSE(validate_weil_surface(4, 9, 0));   // |Tr| > 4 sqrt(q)
  CHECK_FALSE(validate_weil_surface(4, 0, -9));  // u root outside [-2rq, 2rq]
  CHECK_FALSE(validate_weil_surface(1, 0, 0));
  // u discriminant negative: t1=0, t2 > 2q
  CHECK_FALSE(validate_weil_surface(4, 0, 100));
}

TEST_CASE("point_count_surface matches the quartic at 1") {
  CHECK(point_count_surface({16, 0, -31}) == 226);
  CHECK(point_count_surface({7, 0, -7}) == 43);
  CHECK(point_count_surface({2, 0, -4}) == 1);  // trE = 2q: one point
  CHECK_THROWS_AS(point_count_surface({4, 9, 0}), error);
}

TEST_CASE("NPP criterion") {
  CHECK(is_npp({7, 0, -7}));          // b = -7, 7 == 1 mod 3
  CHECK_FALSE(is_npp({16, 0, -32}));  // 2 != 1 mod 3
  CHECK_FALSE(is_npp({7, 0, 7}));     // b >= 0
  CHECK_FALSE(is_npp({16, 0, -31}));  // a^2 - b != q
  CHECK(is_npp({13, 0, -13}));        // 13 == 1 mod 3
}

TEST_CASE("weil_restriction shape and range") {
  auto w = weil_restriction(16, 31);
  CHECK(w.q == 16);
  CHECK(w.t1 == 0);
  CHECK(w.t2 == -31);
  auto w3 = weil_restriction(3, 6);
  CHECK(w3.t2 == -6);
  CHECK_THROWS_AS(weil_restriction(4, 9), error);  // |trE| > 2q
}

TEST_CASE("deuring_trace_exists") {
  CHECK(deuring_trace_exists(2, 256, 31));   // coprime to p
  CHECK(deuring_trace_exists(2, 256, 32));   // +-2q always
  CHECK(deuring_trace_exists(2, 256, -32));
  CHECK(deuring_trace_exists(2, 256, 16));   // +-q with p != 1 mod 3
  CHECK_FALSE(deuring_trace_exists(2, 256, 30));  // even, not 2q nor q
  CHECK_FALSE(deuring_trace_exists(7, 49, 7));    // 7 == 1 mod 3
  CHECK(deuring_trace_exists(7, 49, 5));
  CHECK_THROWS_AS(deuring_trace_exists(2, 8, 1), error);  // q2 not a square
}

TEST_CASE("simplicity classification of quartics") {
  // product of elliptic factors with traces +-3: (t^2-3t+9)(t^2+3t+9)
  CHECK(is_simple_sufficient({9, 0, 9}) == SimpleStatus::NotSimple);
  // the sign sibling is irreducible
  CHECK(is_simple_sufficient({9, 0, -9}) == SimpleStatus::Simple);
  // square of an irreducible quadratic: (t^2 - 2)^2
  CHECK(is_simple_sufficient({2, 0, -4}) == SimpleStatus::Undetermined);
  // rational roots t = +-4: (t-4)^2 (t+4)^2; refused a Simple verdict
  CHECK(is_simple_sufficient({16, 0, -32}) == SimpleStatus::Undetermined);
  CHECK(is_simple_sufficient({16, 0, -31}) == SimpleStatus::Simple);
  // square of an elliptic quadratic (t^2 - t + 2)^2 over q=2:
  // expand: t^4 - 2t^3 + 5t^2 - 4t + 4, i.e. t1=2, t2=5
  CHECK(is_simple_sufficient({2, 2, 5}) == SimpleStatus::NotSimple);
}

TEST_CASE("classification rules and ell licensing") {
  auto npp = classify_no_low_genus({7, 0, -7});
  CHECK(npp.ell_max == 2);
  CHECK(npp.rule == "npp");

  auto prod = classify_no_low_genus({9, 0, 9});
  CHECK(prod.ell_max == 0);
  CHECK(prod.rule == "none");
  CHECK(prod.simplicity == SimpleStatus::NotSimple);

  auto simple = classify_no_low_genus({9, 0, -9});
  CHECK(simple.ell_max == 1);
  CHECK(simple.rule == "simple");

  auto wr = classify_no_low_genus(weil_restriction(16, 31),
                                  WeilRestrictionMeta{2, 16, 31});
  CHECK(wr.ell_max == 2);
  CHECK(wr.rule == "prop45-case-1");

  // provenance with mismatched trace case grants nothing extra
  auto no = classify_no_low_genus(weil_restriction(16, 30),
                                  WeilRestrictionMeta{2, 16, 30});
  CHECK(no.ell_max < 2);

  // squares of quadratics stay Undetermined and get no simple grant
  auto und = classify_no_low_genus({2, 0, -4});
  CHECK(und.simplicity == SimpleStatus::Undetermined);
  CHECK(und.rule != "simple");
}
