// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "productlab.hpp"

#include <algorithm>

namespace abelos {

RRBasisElliptic rr_basis_elliptic(int r) {
  RRBasisElliptic b;
  b.r = r;
  // one monomial per attainable pole order 0, 2, 3, ..., r
  b.monomials.push_back({0, 0});
  for (int w = 2; w <= r; ++w) {
    if (w % 2 == 0)
      b.monomials.push_back({w / 2, 0});
    else
      b.monomials.push_back({(w - 3) / 2, 1});
  }
  return b;
}

namespace {

using elt = Field::elt;
using Series = std::vector<elt>;  // coefficients of t^0, t^1, ...

Series series_mul(const Field& F, const Series& a, const Series& b,
                  std::size_t prec) {
  Series c(prec, 0);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < prec; ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return c;
}

Series series_scale(const Field& F, Series a, elt c) {
  for (auto& v : a) v = F.mul(v, c);
  return a;
}

Series series_add(const Field& F, Series a, const Series& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  return a;
}

Series series_shift(Series a, std::size_t k, std::size_t prec) {
  Series c(prec, 0);
  for (std::size_t i = 0; i + k < prec && i < a.size(); ++i) c[i + k] = a[i];
  return c;
}

// multiplicative inverse of a unit series (a[0] != 0)
Series series_inv(const Field& F, const Series& a, std::size_t prec) {
  Series r(prec, 0);
  elt c0 = F.inv(a[0]);
  r[0] = c0;
  for (std::size_t i = 1; i < prec; ++i) {
    elt s = 0;
    for (std::size_t j = 1; j <= i && j < a.size(); ++j)
      s = F.add(s, F.mul(a[j], r[i - j]));
    r[i] = F.neg(F.mul(c0, s));
  }
  return r;
}

}  // namespace

Field::elt laurent_leading_coeff(const EllipticCurveModel& E, RRMonomial mono,
                                 int r) {
  const Field& F = *E.field;
  const int w = mono.pole_order();
  if (w > r) fail(errc::outside_polygon, "monomial pole order exceeds r");
  const std::size_t prec = static_cast<std::size_t>(r) + 4;

  // With t = x/y, s = 1/y the curve equation becomes
  //   s = t^3 + a2 t^2 s + a4 t s^2 + a6 s^3 - a1 t s - a3 s^2
  // solved by fixed-point iteration; s has valuation exactly 3.
  Series s(prec, 0);
  for (std::size_t it = 0; it < prec + 2; ++it) {
    Series s2 = series_mul(F, s, s, prec);
    Series s3 = series_mul(F, s2, s, prec);
    Series next(prec, 0);
    if (3 < prec) next[3] = 1;  // t^3
    next = series_add(F, next,
                      series_shift(series_scale(F, s, E.a2), 2, prec));
    next = series_add(F, next,
                      series_shift(series_scale(F, s2, E.a4), 1, prec));
    next = series_add(F, next, series_scale(F, s3, E.a6));
    next = series_add(
        F, next, series_shift(series_scale(F, s, F.neg(E.a1)), 1, prec));
    next = series_add(F, next, series_scale(F, s2, F.neg(E.a3)));
    s = std::move(next);
  }
  // s = t^3 * u with u a unit; x = t^-2 u^-1, y = t^-3 u^-1
  Series u(prec, 0);
  for (std::size_t i = 0; i + 3 < prec + 3 && i < prec; ++i)
    u[i] = (i + 3 < s.size()) ? s[i + 3] : 0;
  Series uinv = series_inv(F, u, prec);
  // x^i y^j = t^-(2i+3j) * uinv^(i+j); t^r * monomial = t^(r-w) * uinv^(i+j)
  Series pw(prec, 0);
  pw[0] = 1;
  for (int e = 0; e < mono.i + mono.j; ++e) pw = series_mul(F, pw, uinv, prec);
  // coefficient of t^0 overall = coefficient of t^(w - r) in pw
  if (w < r) return 0;
  return pw[0];
}

namespace {

struct AffinePoint {
  elt x, y;
};

std::vector<AffinePoint> affine_points(const EllipticCurveModel& E) {
  const Field& F = *E.field;
  std::vector<AffinePoint> pts;
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    for (std::uint32_t y = 0; y < F.q(); ++y) {
      // y^2 + a1 x y + a3 y - (x^3 + a2 x^2 + a4 x + a6) = 0
      elt lhs = F.add(F.mul(y, y), F.add(F.mul(E.a1, F.mul(x, y)),
                                         F.mul(E.a3, y)));
      elt x2 = F.mul(x, x);
      elt rhs = F.add(F.mul(x2, x), F.add(F.mul(E.a2, x2),
                                          F.add(F.mul(E.a4, x), E.a6)));
      if (lhs == rhs) pts.push_back({x, y});
    }
  }
  return pts;
}

elt eval_monomial(const Field& F, RRMonomial mono, elt x, elt y) {
  elt v = 1;
  for (int a = 0; a < mono.i; ++a) v = F.mul(v, x);
  if (mono.j) v = F.mul(v, y);
  return v;
}

}  // namespace

ProductSurfaceCode build_code(const EllipticCurveModel& E1,
                              const EllipticCurveModel& E2, int r,
                              EvalMode mode) {
  if (r < 3) fail(errc::invalid_weil_data, "build_code: r >= 3 required");
  if (E1.field->q() != E2.field->q() || E1.field->p() != E2.field->p())
    fail(errc::invalid_weil_data, "build_code: curves over different fields");
  const Field& F = *E1.field;

  auto pts1 = affine_points(E1);
  auto pts2 = affine_points(E2);
  std::int64_t n1 = static_cast<std::int64_t>(pts1.size()) + 1;
  std::int64_t n2 = static_cast<std::int64_t>(pts2.size()) + 1;
  std::uint64_t n = (mode == EvalMode::Full)
                        ? static_cast<std::uint64_t>(n1) * n2
                        : static_cast<std::uint64_t>(pts1.size()) * pts2.size();
  if (n > 1'000'000) fail(errc::point_cap_exceeded, "build_code: n too large");

  ProductSurfaceCode code;
  code.field = E1.field;
  code.r = r;
  code.mode = mode;
  code.count_e1 = n1;
  code.count_e2 = n2;
  code.trace_e1 = static_cast<std::int64_t>(F.q()) + 1 - n1;
  code.trace_e2 = static_cast<std::int64_t>(F.q()) + 1 - n2;
  code.k = static_cast<std::int64_t>(r) * r;
  code.n = static_cast<std::int64_t>(n);

  // point order: (O1 first in Full mode) x (O2 first in Full mode), row-major
  std::vector<std::optional<AffinePoint>> list1, list2;
  if (mode == EvalMode::Full) list1.push_back(std::nullopt);
  for (const auto& p : pts1) list1.push_back(p);
  if (mode == EvalMode::Full) list2.push_back(std::nullopt);
  for (const auto& p : pts2) list2.push_back(p);
  for (const auto& p1 : list1) {
    for (const auto& p2 : list2) {
      ProductPoint pp;
      if (p1) {
        pp.x1 = p1->x;
        pp.y1 = p1->y;
      } else {
        pp.at_inf1 = true;
      }
      if (p2) {
        pp.x2 = p2->x;
        pp.y2 = p2->y;
      } else {
        pp.at_inf2 = true;
      }
      code.points.push_back(pp);
    }
  }

  auto basis = rr_basis_elliptic(r);
  std::vector<elt> lead1(basis.monomials.size()), lead2(basis.monomials.size());
  if (mode == EvalMode::Full) {
    for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
      lead1[i] = laurent_leading_coeff(E1, basis.monomials[i], r);
      lead2[i] = laurent_leading_coeff(E2, basis.monomials[i], r);
    }
  }

  code.rows.reserve(static_cast<std::size_t>(code.k));
  for (std::size_t bi = 0; bi < basis.monomials.size(); ++bi) {
    for (std::size_t bj = 0; bj < basis.monomials.size(); ++bj) {
      std::vector<elt> row;
      row.reserve(code.points.size());
      for (const auto& pp : code.points) {
        elt v1 = pp.at_inf1 ? lead1[bi]
                            : eval_monomial(F, basis.monomials[bi], pp.x1,
                                            pp.y1);
        elt v2 = pp.at_inf2 ? lead2[bj]
                            : eval_monomial(F, basis.monomials[bj], pp.x2,
                                            pp.y2);
        row.push_back(F.mul(v1, v2));
      }
      code.rows.push_back(std::move(row));
    }
  }
  return code;
}

namespace {

std::int64_t matrix_rank(const Field& F, std::vector<std::vector<elt>> m) {
  std::size_t rank = 0;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    elt inv = F.inv(m[rank][c]);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = F.mul(m[rank][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      elt f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = F.sub(m[i][j], F.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

}  // namespace

CodeMeasurement measure(const ProductSurfaceCode& code, std::uint64_t cap) {
  const Field& F = *code.field;
  CodeMeasurement meas;
  meas.rank = matrix_rank(F, code.rows);
  meas.injective = (meas.rank == code.k);

  // q^k total messages
  std::uint64_t total = 1;
  bool fits = true;
  for (std::int64_t i = 0; i < code.k; ++i) {
    if (total > cap / F.q()) {
      fits = false;
      break;
    }
    total *= F.q();
  }
  if (total > cap) fits = false;
  if (!fits) {
    meas.exact = false;
    return meas;
  }

  const std::size_t n = code.points.size();
  const std::size_t k = static_cast<std::size_t>(code.k);
  std::vector<elt> word(n, 0);
  std::vector<elt> msg(k, 0);
  std::uint64_t best_weight = n + 1;
  std::uint64_t max_zeros = 0;
  meas.weight_histogram.assign(n + 1, 0);

  // odometer enumeration with incremental row updates
  for (std::uint64_t count = 1; count < total; ++count) {
    std::size_t pos = 0;
    while (true) {
      elt old = msg[pos];
      elt next = (old + 1 == F.q()) ? 0 : old + 1;
      msg[pos] = next;
      elt delta = F.sub(next, old);
      const auto& row = code.rows[pos];
      for (std::size_t c = 0; c < n; ++c)
        word[c] = F.add(word[c], F.mul(delta, row[c]));
      if (next != 0) break;
      ++pos;  // carry
    }
    std::uint64_t w = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (word[c] != 0) ++w;
    meas.weight_histogram[w] += 1;
    if (w != 0 && w < best_weight) best_weight = w;
    std::uint64_t zeros = n - w;
    if (zeros > max_zeros && w != 0) max_zeros = zeros;
    if (w == 0) max_zeros = std::max(max_zeros, static_cast<std::uint64_t>(n));
  }

  meas.exact = true;
  meas.d = static_cast<std::int64_t>(best_weight);
  meas.max_nf = static_cast<std::int64_t>(max_zeros);
  return meas;
}

LabReport check_against_bounds(const ProductSurfaceCode& code,
                               const CodeMeasurement& meas) {
  LabReport rep;
  rep.n = code.n;
  rep.k = meas.rank;
  rep.max_nf = meas.max_nf;
  if (meas.exact) rep.d_exact = meas.d;

  const std::int64_t q = code.field->q();
  const std::int64_t tr_a = code.trace_e1 + code.trace_e2;
  const std::int64_t num_a = code.count_e1 * code.count_e2;
  const std::int64_t m = static_cast<std::int64_t>(isqrt_floor(4ull * q));
  const std::int64_t h2 = 2;

  BoundInput in;
  in.q = static_cast<std::uint32_t>(q);
  in.t1 = tr_a;
  in.num_points = num_a;
  in.h2 = h2;
  in.r = code.r;
  in.ell = 1;
  rep.general = bound_general(in);

  // proof-level cap on N(f) from the general theorem
  rep.nf_cap = code.r * h2 * (q + 1 - tr_a + m) + code.r * code.r * m * h2 / 2;

  rep.checks.injectivity_failed = !meas.injective;
  rep.checks.dim_ok =
      meas.injective && meas.rank == code_dimension(code.r, h2);
  if (meas.exact) {
    // definition-level identity d = n - max N(f) (injective case)
    if (meas.injective && meas.d != code.n - meas.max_nf)
      fail(errc::bound_violation,
           "measure: d != n - max N(f), implementation falsified");
    rep.checks.dist_ok = true;
    if (!rep.general.vacuous && meas.d < rep.general.d_lower)
      fail(errc::bound_violation,
           "exact minimum distance falls below the certified bound");
    rep.checks.nf_cap_ok = meas.max_nf <= rep.nf_cap;
    if (!rep.checks.nf_cap_ok)
      fail(errc::bound_violation, "max N(f) exceeds the proof-level cap");
  }
  return rep;
}

}  // namespace abelos
