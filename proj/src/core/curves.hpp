// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_CURVES_HPP
#define ABELOS_CORE_CURVES_HPP

#include <cstdint>
#include <vector>

#include "ff.hpp"

namespace abelos {

// Cap on q^d for exhaustive point counting.
inline constexpr std::uint64_t kCountCap = std::uint64_t(1) << 24;

// Long Weierstrass model y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6.
// Nonsingularity (discriminant != 0) is checked at construction.
struct EllipticCurveModel {
  FieldPtr field;
  Field::elt a1, a2, a3, a4, a6;

  EllipticCurveModel(FieldPtr F, Field::elt a1_, Field::elt a2_,
                     Field::elt a3_, Field::elt a4_, Field::elt a6_);

  Field::elt discriminant() const;
  // trace over the base field, from an exhaustive count
  std::int64_t trace() const;
};

// Genus-2 model y^2 + h(x)*y = f(x), deg f in {5,6}, deg h <= 3.
struct Genus2CurveModel {
  FieldPtr field;
  std::vector<Field::elt> f;  // low to high
  std::vector<Field::elt> h;

  Genus2CurveModel(FieldPtr F, std::vector<Field::elt> f_,
                   std::vector<Field::elt> h_);
};

struct SurfaceWeilData;  // isogeny.hpp

struct CurveCountReport {
  std::uint32_t q = 0;
  std::vector<std::int64_t> counts;  // counts[i] = #C(F_{q^{i+1}})
  std::int64_t trace = 0;            // q + 1 - counts[0]
};

// Exact #E(F_{q^d}). Exhaustive mode enumerates x over F_{q^d}; recurrence
// mode derives extension counts from the base trace via the Frobenius power
// sums s_1 = t, s_2 = t^2 - 2q, s_d = t*s_{d-1} - q*s_{d-2}. When
// q^d <= 2^16 both are run and must agree.
enum class CountMode { Auto, Exhaustive, Recurrence };
std::int64_t count_points_elliptic(const EllipticCurveModel& E,
                                   std::uint32_t d,
                                   CountMode mode = CountMode::Auto);

// Exact smooth-model count of #C(F_{q^d}), d in {1,2}. Points at infinity:
// one for deg f = 5; for deg f = 6 the solutions of y^2 + h3*y = f6 where
// h3, f6 are the x^3 / x^6 coefficients.
std::int64_t count_points_genus2(const Genus2CurveModel& C, std::uint32_t d);

// (q, t1, t2) from genus-2 counts: t1 = q+1-N1, t2 = (t1^2 - (q^2+1-N2))/2.
// Validates the resulting quartic.
SurfaceWeilData weil_data_from_counts(std::uint32_t q, std::int64_t n1,
                                      std::int64_t n2);

}  // namespace abelos

#endif
