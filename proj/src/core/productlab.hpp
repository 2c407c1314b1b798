// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_PRODUCTLAB_HPP
#define ABELOS_CORE_PRODUCTLAB_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bounds.hpp"
#include "curves.hpp"

namespace abelos {

inline constexpr std::uint64_t kEnumCapDefault = 10'000'000;

// Monomial basis of L(r*O) on an elliptic curve: x^i y^j with j in {0,1}
// and pole order 2i + 3j <= r. Exactly r monomials for r >= 1, with pairwise
// distinct pole orders 0, 2, 3, ..., r.
struct RRMonomial {
  int i = 0;
  int j = 0;
  int pole_order() const { return 2 * i + 3 * j; }
};

struct RRBasisElliptic {
  int r = 0;
  std::vector<RRMonomial> monomials;  // sorted by pole order
};

RRBasisElliptic rr_basis_elliptic(int r);

// Coefficient of t^0 in t^r * x^i y^j expanded at the infinity point in the
// uniformizer t = x/y, where x = t^-2(1+O(t)), y = t^-3(1+O(t)) are obtained
// by solving the Weierstrass equation in the power-series ring. Nonzero only
// when the pole order 2i+3j equals r.
Field::elt laurent_leading_coeff(const EllipticCurveModel& E, RRMonomial mono,
                                 int r);

enum class EvalMode { Punctured, Full };

// An evaluation point on E1 x E2; infinity coordinates only in Full mode.
struct ProductPoint {
  bool at_inf1 = false;
  Field::elt x1 = 0, y1 = 0;
  bool at_inf2 = false;
  Field::elt x2 = 0, y2 = 0;
};

// The section-5 product code C(E1 x E2, rH), H = E1x{O2} + {O1}xE2 (H^2 = 2).
struct ProductSurfaceCode {
  FieldPtr field;
  std::int64_t r = 0;
  EvalMode mode = EvalMode::Punctured;
  std::int64_t n = 0;  // length
  std::int64_t k = 0;  // r^2 basis functions (rank may be smaller)
  std::int64_t count_e1 = 0, count_e2 = 0;
  std::int64_t trace_e1 = 0, trace_e2 = 0;
  std::vector<ProductPoint> points;
  // generator rows, one per basis function g_i (x) h_j, row-major over points
  std::vector<std::vector<Field::elt>> rows;
};

ProductSurfaceCode build_code(const EllipticCurveModel& E1,
                              const EllipticCurveModel& E2, int r,
                              EvalMode mode);

struct CodeMeasurement {
  std::int64_t rank = 0;
  bool exact = false;           // full enumeration ran
  std::int64_t d = 0;           // exact minimum distance (when exact)
  std::int64_t max_nf = 0;      // max zero-coordinate count over nonzero f
  bool injective = false;       // rank == k
  std::vector<std::uint64_t> weight_histogram;  // size n+1 when exact
};

// Rank always; exact distance by enumerating all q^k message vectors when
// q^k <= cap, else rank only (enumeration_cap_exceeded is *not* thrown: the
// result is just labeled non-exhaustive).
CodeMeasurement measure(const ProductSurfaceCode& code,
                        std::uint64_t cap = kEnumCapDefault);

struct LabChecks {
  bool dim_ok = false;
  bool dist_ok = false;
  bool nf_cap_ok = false;
  bool injectivity_failed = false;
};

struct LabReport {
  std::int64_t n = 0;
  std::int64_t k = 0;  // measured rank
  std::optional<std::int64_t> d_exact;
  std::int64_t max_nf = 0;
  BoundResult general;
  std::int64_t nf_cap = 0;
  LabChecks checks;
};

// Validates the measurement against the general distance bound, the
// dimension formula and the proof-level N(f) cap. A failed check throws
// bound_violation: it falsifies the implementation.
LabReport check_against_bounds(const ProductSurfaceCode& code,
                               const CodeMeasurement& meas);

}  // namespace abelos

#endif
