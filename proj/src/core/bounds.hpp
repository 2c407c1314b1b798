// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_BOUNDS_HPP
#define ABELOS_CORE_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isogeny.hpp"
#include "quadexact.hpp"

namespace abelos {

// Everything the distance bounds consume. H2 is the self-intersection of the
// ample divisor (even, >= 2, = 2*pi_H - 2); r >= 3 makes rH very ample;
// ell >= 2 must be licensed by a classification granting it (the unsafe flag
// is the explicit exploration escape hatch and watermarks all output).
struct BoundInput {
  std::uint32_t q = 0;
  std::int64_t t1 = 0;
  std::int64_t num_points = 0;
  std::int64_t h2 = 2;
  std::int64_t r = 3;
  int ell = 1;
  int galois_degree = 1;
  bool ell_licensed = false;
  bool unsafe_ell = false;
};

// Validates shape constraints and ell licensing against a classification.
// Pass nullptr for report only with ell = 1 and a surface known simple, or
// with unsafe = true.
BoundInput make_bound_input(const SurfaceWeilData& w, std::int64_t h2,
                            std::int64_t r, int ell,
                            const ClassificationReport* report,
                            int galois_degree = 1, bool unsafe = false);

enum class BoundTheorem { General, SimpleEll, Haloui, Vacuous };
const char* to_string(BoundTheorem t);

struct BoundResult {
  std::int64_t n = 0;        // code length = #A(F_q)
  std::int64_t k = 0;        // dimension r^2 H^2 / 2
  std::int64_t d_lower = 0;  // certified lower bound (meaningful unless vacuous)
  BoundTheorem theorem = BoundTheorem::Vacuous;
  bool vacuous = false;
  bool injectivity_ok = false;  // d_lower >= 1 forces max N(f) < #A
  std::int64_t nf_bound = 0;    // the subtracted max-N(f) estimate, floor'ed
  std::string winner;           // which candidate achieved the max
  std::vector<std::string> candidates;  // symbolic candidate values
  std::int64_t relevance_B = 0;
  bool watermark_unsafe = false;
};

// dim L(rH) = r^2 H^2 / 2.
std::int64_t code_dimension(std::int64_t r, std::int64_t h2);

// d >= #A - (r H^2 / e)(q + 1 - Tr + m) - r^2 m H^2 / 2, m = floor(2 sqrt q).
BoundResult bound_general(const BoundInput& in);

struct PhiEvaluation {
  std::int64_t x = 0;
  QuadExact alpha;  // r*sqrt(H^2/2) - x*sqrt(ell)
  QuadExact value;
};

// phi(x) of the sharper theorem, evaluated exactly on the k2 = 0 axis.
// Requires 1 <= x and (x, 0) inside the polygon K.
PhiEvaluation phi(std::int64_t x, const BoundInput& in);

// The exact three-candidate maximum
//   max( floor(r sqrt(H^2/2)) (ell-1), phi(1), phi(floor(r sqrt(H^2/2ell))) )
// together with the winning candidate's label.
struct ClosedFormMax {
  QuadExact value;
  std::string winner;
  std::vector<std::string> candidates;
};
ClosedFormMax simple_closed_form_max(const BoundInput& in);

// d >= #A - max( floor(r sqrt(H^2/2)) (ell-1), phi(1), phi(floor(r sqrt(H^2/2ell))) ).
BoundResult bound_simple(const BoundInput& in);

// The weakened piecewise specialization at H^2 = 2, ell = 1 that coincides
// with the simple-Jacobian bound of the literature.
BoundResult bound_haloui(const BoundInput& in);

enum class PolygonObjective { TheoremPhi, SharpenedEq13 };

struct PolygonMax {
  QuadExact value;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
};

// Exact maximum of the two-case objective over the integer points of
//   K = { (k1,k2) : k1,k2 >= 0, k1+k2 >= 1, sqrt(ell) k1 + k2 <= r sqrt(H^2/2) }.
// SharpenedEq13 keeps the extra -alpha(ell-1) term.
PolygonMax polygon_max_bruteforce(const BoundInput& in,
                                  PolygonObjective objective);

// Smallest q at which the sharper bound starts to bite: ceil(4 (sqrt(H2)+1)^2).
std::int64_t relevance_threshold(std::int64_t h2);

struct EllComparisonRow {
  int ell = 0;
  BoundResult simple;
  bool hypothetical = false;  // not licensed, exploration only
};

struct EllComparison {
  BoundResult general;
  std::vector<EllComparisonRow> rows;
  int best_ell = 0;  // 0 when the general bound dominates every row
};

EllComparison compare_ell(const BoundInput& base, const std::vector<int>& ells);

// Largest integer x with ell * x^2 <= a  (i.e. floor(sqrt(a / ell))).
std::int64_t floor_sqrt_ratio(std::int64_t a, std::int64_t ell);

}  // namespace abelos

#endif
