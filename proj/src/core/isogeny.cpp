// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "isogeny.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>

#include "errors.hpp"
#include "ff.hpp"

namespace abelos {

bool validate_weil_surface(std::uint32_t q, std::int64_t t1, std::int64_t t2) {
  if (q < 2) return false;
  if (t1 * t1 > 16 * static_cast<std::int64_t>(q)) return false;  // |Tr| <= 4*sqrt(q)
  const double dq = static_cast<double>(q);
  const double tol = 1e-9;
  // The substitution u = t + q/t turns the quartic into
  // u^2 - t1*u + (t2 - 2q); all four roots have |t| = sqrt(q) exactly when
  // both u roots are real (integer discriminant, exact test) and lie in
  // [-2 sqrt(q), 2 sqrt(q)] (numeric test, 1e-9 relative tolerance).
  const std::int64_t disc =
      t1 * t1 - 4 * (t2 - 2 * static_cast<std::int64_t>(q));
  if (disc < 0) return false;
  const double sd = std::sqrt(static_cast<double>(disc));
  for (int sign : {-1, 1}) {
    double u = (static_cast<double>(t1) + sign * sd) / 2.0;
    if (u * u > 4.0 * dq * (1.0 + tol)) return false;
    // Recover the conjugate pair t, with the t-discriminant clamped to the
    // nonpositive side it provably lies on: t = u/2 +- i*sqrt(q - u^2/4).
    double d2 = std::min(u * u - 4.0 * dq, 0.0);
    std::complex<double> t(u / 2.0, std::sqrt(-d2) / 2.0);
    if (std::abs(std::norm(t) - dq) > tol * dq) return false;
  }
  return true;
}

std::int64_t point_count_surface(const SurfaceWeilData& w) {
  if (!validate_weil_surface(w))
    fail(errc::invalid_weil_data, "point_count_surface: invalid Weil data");
  std::int64_t q = w.q;
  return 1 - w.t1 + w.t2 - q * w.t1 + q * q;
}

bool is_npp(const SurfaceWeilData& w) {
  if (!validate_weil_surface(w))
    fail(errc::invalid_weil_data, "is_npp: invalid Weil data");
  std::int64_t a = -w.t1, b = w.t2;
  if (a * a - b != static_cast<std::int64_t>(w.q)) return false;
  if (b >= 0) return false;
  for (std::uint64_t f : trial_factor(b))
    if (f % 3 != 1) return false;
  return true;
}

SurfaceWeilData weil_restriction(std::uint32_t q, std::int64_t tr_e) {
  std::int64_t qq = static_cast<std::int64_t>(q) * q;
  if (tr_e * tr_e > 4 * qq)
    fail(errc::trace_out_of_range, "weil_restriction: |trE| > 2q");
  return SurfaceWeilData{q, 0, -tr_e};
}

bool deuring_trace_exists(std::uint32_t p, std::uint64_t q2,
                          std::int64_t beta) {
  std::uint64_t q = isqrt_floor(q2);
  if (q * q != q2)
    fail(errc::invalid_weil_data, "deuring_trace_exists: q2 is not a square");
  std::int64_t iq = static_cast<std::int64_t>(q);
  std::int64_t ab = std::llabs(beta);
  if (ab == 2 * iq) return true;
  if (ab == iq && p % 3 != 1) return true;
  if (beta * beta <= 4 * iq * iq &&
      std::gcd(static_cast<std::uint64_t>(ab), std::uint64_t(p)) == 1)
    return true;
  return false;
}

namespace {

// Divisors of v (positive), ascending.
std::vector<std::int64_t> divisors(std::int64_t v) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d != v / d) out.push_back(v / d);
    }
  }
  return out;
}

bool is_perfect_square(std::int64_t v, std::int64_t& root) {
  if (v < 0) return false;
  root = static_cast<std::int64_t>(isqrt_floor(static_cast<std::uint64_t>(v)));
  return root * root == v;
}

}  // namespace

SimpleStatus is_simple_sufficient(const SurfaceWeilData& w) {
  if (!validate_weil_surface(w))
    fail(errc::invalid_weil_data, "is_simple_sufficient: invalid Weil data");
  const std::int64_t q = w.q, t1 = w.t1, t2 = w.t2;
  const std::int64_t q2 = q * q;

  auto f = [&](std::int64_t t) {
    return t * t * t * t - t1 * t * t * t + t2 * t * t - q * t1 * t + q2;
  };

  // Rational roots divide q^2.
  for (std::int64_t d : divisors(q2)) {
    if (f(d) == 0 || f(-d) == 0) return SimpleStatus::Undetermined;
  }

  // Factorizations (t^2 + u t + v)(t^2 + w t + z) with v*z = q^2:
  //   u + w = -t1,  u*w = t2 - v - z,  u*z + v*w = -q*t1.
  bool reducible = false;
  bool elliptic_product = false;
  bool square_of_quadratic = false;
  for (std::int64_t dv : divisors(q2)) {
    for (std::int64_t v : {dv, -dv}) {
      std::int64_t z = q2 / v;
      if (v == z) {
        // u + w = -t1, u*w = t2 - 2v; integer solutions need a square disc
        std::int64_t disc = t1 * t1 - 4 * (t2 - 2 * v), s = 0;
        if (!is_perfect_square(disc, s)) continue;
        if ((-t1 + s) % 2 != 0) continue;
        std::int64_t u = (-t1 + s) / 2, ww = (-t1 - s) / 2;
        if (u * z + v * ww != -q * t1) continue;
        reducible = true;
        if (u == ww && v == z) square_of_quadratic = true;
        if (v == q && u * u <= 4 * q && ww * ww <= 4 * q)
          elliptic_product = true;
      } else {
        // w*(v - z) = t1*z - q*t1
        std::int64_t num = t1 * z - q * t1, den = v - z;
        if (num % den != 0) continue;
        std::int64_t ww = num / den, u = -t1 - ww;
        if (u * ww != t2 - v - z) continue;
        if (u * z + v * ww != -q * t1) continue;
        reducible = true;
      }
    }
  }
  if (!reducible) return SimpleStatus::Simple;
  if (elliptic_product && !square_of_quadratic) return SimpleStatus::NotSimple;
  if (elliptic_product) {
    // (t^2 - t0 t + q)^2 with t0^2 <= 4q: still a product of elliptic factors
    return SimpleStatus::NotSimple;
  }
  return SimpleStatus::Undetermined;
}

const char* to_string(SimpleStatus s) {
  switch (s) {
    case SimpleStatus::Simple: return "Simple";
    case SimpleStatus::NotSimple: return "NotSimple";
    default: return "Undetermined";
  }
}

ClassificationReport classify_no_low_genus(
    const SurfaceWeilData& w,
    const std::optional<WeilRestrictionMeta>& provenance) {
  ClassificationReport rep;
  rep.weil = w;
  rep.valid = validate_weil_surface(w);
  if (!rep.valid)
    fail(errc::invalid_weil_data, "classify_no_low_genus: invalid Weil data");
  rep.simplicity = is_simple_sufficient(w);
  rep.npp = is_npp(w);

  int prop45_case = 0;
  if (provenance) {
    const auto& m = *provenance;
    // q = p^e exactly, and "q square" means e even
    std::uint64_t v = m.q;
    std::uint32_t e = 0;
    while (v > 1 && v % m.p == 0) {
      v /= m.p;
      ++e;
    }
    bool q_ok = (v == 1 && e >= 1);
    bool q_square = q_ok && (e % 2 == 0);
    std::int64_t q = m.q, tr = m.tr_e;
    if (q_ok && w.t1 == 0 && w.t2 == -tr && w.q == m.q) {
      if (tr == 2 * q - 1) prop45_case = 1;
      else if (m.p > 2 && tr == 2 * q - 2) prop45_case = 2;
      else if ((m.p % 12 == 11 || m.p == 3) && q_square && tr == q)
        prop45_case = 3;
      else if (m.p == 2 && !q_square && tr == q) prop45_case = 4;
      else if ((q == 2 || q == 3) && tr == 2 * q) prop45_case = 5;
    }
  }

  // A surface recognized as a product of elliptic curves contains genus-1
  // curves; it never gets a low-genus guarantee.
  if (rep.simplicity == SimpleStatus::NotSimple) {
    rep.ell_max = 0;
    rep.rule = "none";
    return rep;
  }
  if (rep.npp) {
    rep.ell_max = 2;
    rep.rule = "npp";
  } else if (prop45_case != 0) {
    rep.ell_max = 2;
    rep.rule = "prop45-case-" + std::to_string(prop45_case);
  } else if (rep.simplicity == SimpleStatus::Simple) {
    rep.ell_max = 1;
    rep.rule = "simple";
  } else {
    rep.ell_max = 0;
    rep.rule = "none";
  }
  return rep;
}

}  // namespace abelos
