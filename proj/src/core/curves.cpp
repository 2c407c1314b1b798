// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "curves.hpp"

#include <algorithm>

#include "isogeny.hpp"

namespace abelos {

namespace {

using elt = Field::elt;

// b-invariants of a long Weierstrass model.
struct BInv {
  elt b2, b4, b6, b8;
};

BInv b_invariants(const Field& F, elt a1, elt a2, elt a3, elt a4, elt a6) {
  BInv b;
  b.b2 = F.add(F.mul(a1, a1), F.mul(F.from_int(4), a2));
  b.b4 = F.add(F.mul(F.from_int(2), a4), F.mul(a1, a3));
  b.b6 = F.add(F.mul(a3, a3), F.mul(F.from_int(4), a6));
  // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
  elt t = F.mul(F.mul(a1, a1), a6);
  t = F.add(t, F.mul(F.mul(F.from_int(4), a2), a6));
  t = F.sub(t, F.mul(F.mul(a1, a3), a4));
  t = F.add(t, F.mul(a2, F.mul(a3, a3)));
  t = F.sub(t, F.mul(a4, a4));
  b.b8 = t;
  return b;
}

}  // namespace

EllipticCurveModel::EllipticCurveModel(FieldPtr F, elt a1_, elt a2_, elt a3_,
                                       elt a4_, elt a6_)
    : field(std::move(F)), a1(a1_), a2(a2_), a3(a3_), a4(a4_), a6(a6_) {
  if (discriminant() == 0)
    fail(errc::singular_curve, "elliptic model is singular");
}

Field::elt EllipticCurveModel::discriminant() const {
  const Field& F = *field;
  auto b = b_invariants(F, a1, a2, a3, a4, a6);
  // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
  elt d = F.neg(F.mul(F.mul(b.b2, b.b2), b.b8));
  d = F.sub(d, F.mul(F.from_int(8), F.mul(b.b4, F.mul(b.b4, b.b4))));
  d = F.sub(d, F.mul(F.from_int(27), F.mul(b.b6, b.b6)));
  d = F.add(d, F.mul(F.from_int(9), F.mul(b.b2, F.mul(b.b4, b.b6))));
  return d;
}

std::int64_t EllipticCurveModel::trace() const {
  return static_cast<std::int64_t>(field->q()) + 1 -
         count_points_elliptic(*this, 1, CountMode::Exhaustive);
}

namespace {

std::int64_t count_elliptic_exhaustive(const EllipticCurveModel& E,
                                       std::uint32_t d) {
  const Field& base = *E.field;
  std::uint64_t qd = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    qd *= base.q();
    if (qd > kCountCap)
      fail(errc::cap_exceeded, "count_points_elliptic: q^d > 2^24");
  }
  FieldPtr bigp;
  const Field* F = &base;
  std::vector<elt> a(5);
  elt coeffs[5] = {E.a1, E.a2, E.a3, E.a4, E.a6};
  if (d == 1) {
    for (int i = 0; i < 5; ++i) a[i] = coeffs[i];
  } else {
    bigp = Field::make(base.p(), base.n() * d);
    F = bigp.get();
    auto emb = base.embed_into(*F);
    for (int i = 0; i < 5; ++i) a[i] = emb[coeffs[i]];
  }
  std::int64_t count = 1;  // point at infinity
  for (std::uint32_t x = 0; x < F->q(); ++x) {
    // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
    elt h = F->add(F->mul(a[0], x), a[2]);
    elt x2 = F->mul(x, x);
    elt rhs = F->add(F->mul(x2, x),
                     F->add(F->mul(a[1], x2), F->add(F->mul(a[3], x), a[4])));
    count += F->count_quadratic_roots(h, rhs);
  }
  return count;
}

std::int64_t count_elliptic_recurrence(const EllipticCurveModel& E,
                                       std::uint32_t d) {
  const std::int64_t q = E.field->q();
  std::int64_t n1 = count_elliptic_exhaustive(E, 1);
  std::int64_t t = q + 1 - n1;
  // power sums of the two Frobenius roots
  __int128 s_prev = t, s_prev2 = 2;  // s_0 = 2, s_1 = t
  if (d == 1) return n1;
  __int128 s = 0;
  for (std::uint32_t i = 2; i <= d; ++i) {
    s = (__int128)t * s_prev - (__int128)q * s_prev2;
    s_prev2 = s_prev;
    s_prev = s;
  }
  __int128 qd = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    qd *= q;
    if (qd > (__int128(1) << 62))
      fail(errc::cap_exceeded, "count_points_elliptic: q^d overflows");
  }
  return static_cast<std::int64_t>(qd + 1 - s_prev);
}

}  // namespace

std::int64_t count_points_elliptic(const EllipticCurveModel& E,
                                   std::uint32_t d, CountMode mode) {
  const std::uint64_t q = E.field->q();
  std::uint64_t qd = 1;
  bool fits = true;
  for (std::uint32_t i = 0; i < d; ++i) {
    qd *= q;
    if (qd > kCountCap) {
      fits = false;
      break;
    }
  }
  switch (mode) {
    case CountMode::Exhaustive:
      return count_elliptic_exhaustive(E, d);
    case CountMode::Recurrence:
      return count_elliptic_recurrence(E, d);
    case CountMode::Auto:
    default: {
      std::int64_t n = count_elliptic_recurrence(E, d);
      if (fits && qd <= (std::uint64_t(1) << 16)) {
        // mandatory cross-check at small sizes
        std::int64_t ne = count_elliptic_exhaustive(E, d);
        if (ne != n)
          fail(errc::inconsistent_counts,
               "count_points_elliptic: recurrence and exhaustive disagree");
      }
      return n;
    }
  }
}

namespace {

// Degree of a coefficient vector (low to high); -1 for the zero polynomial.
int poly_deg(const std::vector<elt>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i] != 0) return i;
  return -1;
}

std::vector<elt> poly_derivative(const Field& F, const std::vector<elt>& c) {
  std::vector<elt> d;
  for (std::size_t i = 1; i < c.size(); ++i)
    d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), c[i]));
  return d;
}

std::vector<elt> poly_mul(const Field& F, const std::vector<elt>& a,
                          const std::vector<elt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<elt> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  return c;
}

std::vector<elt> poly_add(const Field& F, std::vector<elt> a,
                          const std::vector<elt>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  return a;
}

std::vector<elt> poly_gcd_f(const Field& F, std::vector<elt> a,
                            std::vector<elt> b) {
  auto trim = [&](std::vector<elt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    elt binv = F.inv(b.back());
    while (a.size() >= b.size()) {
      elt lead = a.back();
      if (lead != 0) {
        elt c = F.mul(lead, binv);
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
          a[off + j] = F.sub(a[off + j], F.mul(c, b[j]));
      }
      a.pop_back();
      trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

Genus2CurveModel::Genus2CurveModel(FieldPtr Fp_, std::vector<elt> f_,
                                   std::vector<elt> h_)
    : field(std::move(Fp_)), f(std::move(f_)), h(std::move(h_)) {
  const Field& F = *field;
  int df = poly_deg(f);
  if (df != 5 && df != 6)
    fail(errc::singular_curve, "genus-2 model needs deg f in {5,6}");
  if (poly_deg(h) > 3)
    fail(errc::singular_curve, "genus-2 model needs deg h <= 3");
  f.resize(7, 0);
  h.resize(4, 0);

  if (F.p() == 2) {
    // y^2 = f(x) is never smooth in characteristic 2
    if (poly_deg(h) < 0)
      fail(errc::singular_curve, "genus-2 model needs h != 0 in char 2");
    // affine singular point iff h and h'^2 f + f'^2 share a root
    auto hp = poly_derivative(F, h);
    auto fp = poly_derivative(F, f);
    auto s = poly_add(F, poly_mul(F, poly_mul(F, hp, hp), f),
                      poly_mul(F, fp, fp));
    auto g = poly_gcd_f(F, h, s);
    if (poly_deg(g) > 0)
      fail(errc::singular_curve, "genus-2 model has an affine singularity");
  } else {
    // smooth iff 4f + h^2 is squarefree of degree 5 or 6
    auto s = poly_mul(F, h, h);
    std::vector<elt> f4 = f;
    for (auto& c : f4) c = F.mul(F.from_int(4), c);
    s = poly_add(F, std::move(s), f4);
    int ds = poly_deg(s);
    if (ds != 5 && ds != 6)
      fail(errc::singular_curve, "genus-2 model degenerates (deg 4f+h^2)");
    auto g = poly_gcd_f(F, s, poly_derivative(F, s));
    if (poly_deg(g) > 0)
      fail(errc::singular_curve, "genus-2 model has a singular point");
  }
}

std::int64_t count_points_genus2(const Genus2CurveModel& C, std::uint32_t d) {
  if (d != 1 && d != 2)
    fail(errc::cap_exceeded, "count_points_genus2: d must be 1 or 2");
  const Field& base = *C.field;
  std::uint64_t qd = base.q();
  if (d == 2) qd *= base.q();
  if (qd > kCountCap)
    fail(errc::cap_exceeded, "count_points_genus2: q^d > 2^24");

  FieldPtr bigp;
  const Field* F = &base;
  std::vector<elt> f(7), h(4);
  if (d == 1) {
    f = C.f;
    h = C.h;
  } else {
    bigp = Field::make(base.p(), base.n() * 2);
    F = bigp.get();
    auto emb = base.embed_into(*F);
    for (int i = 0; i < 7; ++i) f[i] = emb[C.f[i]];
    for (int i = 0; i < 4; ++i) h[i] = emb[C.h[i]];
  }

  std::int64_t count = 0;
  for (std::uint32_t x = 0; x < F->q(); ++x)
    count += F->count_quadratic_roots(F->eval_poly(h, x), F->eval_poly(f, x));
  // points at infinity on the smooth model
  if (poly_deg(f) == 5) {
    count += 1;
  } else {
    count += F->count_quadratic_roots(h[3], f[6]);
  }
  return count;
}

SurfaceWeilData weil_data_from_counts(std::uint32_t q, std::int64_t n1,
                                      std::int64_t n2) {
  std::int64_t t1 = static_cast<std::int64_t>(q) + 1 - n1;
  std::int64_t s2 = static_cast<std::int64_t>(q) * q + 1 - n2;  // sum of squares
  std::int64_t num = t1 * t1 - s2;
  if (num % 2 != 0)
    fail(errc::inconsistent_counts,
         "weil_data_from_counts: t1^2 - (q^2+1-N2) is odd");
  SurfaceWeilData w{q, t1, num / 2};
  if (!validate_weil_surface(w))
    fail(errc::inconsistent_counts,
         "weil_data_from_counts: counts do not form a Weil quartic");
  return w;
}

}  // namespace abelos
