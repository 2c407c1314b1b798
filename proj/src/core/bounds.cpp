// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "bounds.hpp"

#include <algorithm>

#include "errors.hpp"
#include "ff.hpp"

namespace abelos {

namespace {

std::int64_t m_of(std::uint32_t q) {
  return static_cast<std::int64_t>(isqrt_floor(4ull * q));
}

void check_shape(const BoundInput& in) {
  if (in.h2 < 2 || in.h2 % 2 != 0)
    fail(errc::odd_h2, "H^2 must be even and >= 2");
  if (in.r < 3)
    fail(errc::invalid_weil_data, "r >= 3 is required for very ampleness");
  if (in.ell < 1) fail(errc::invalid_weil_data, "ell must be >= 1");
  if (in.galois_degree < 1)
    fail(errc::invalid_weil_data, "galois degree must be >= 1");
  if (in.t1 * in.t1 > 16 * static_cast<std::int64_t>(in.q))
    fail(errc::invalid_weil_data, "trace violates |Tr| <= 4 sqrt(q)");
}

std::int64_t floor_quad(const QuadExact& v) {
  return static_cast<std::int64_t>(v.floor().get_si());
}

}  // namespace

std::int64_t floor_sqrt_ratio(std::int64_t a, std::int64_t ell) {
  if (a < 0 || ell < 1) fail(errc::invalid_weil_data, "floor_sqrt_ratio");
  std::int64_t x = static_cast<std::int64_t>(
      isqrt_floor(static_cast<std::uint64_t>(a / ell)));
  while (ell * (x + 1) * (x + 1) <= a) ++x;
  while (x > 0 && ell * x * x > a) --x;
  return x;
}

BoundInput make_bound_input(const SurfaceWeilData& w, std::int64_t h2,
                            std::int64_t r, int ell,
                            const ClassificationReport* report,
                            int galois_degree, bool unsafe) {
  BoundInput in;
  in.q = w.q;
  in.t1 = w.t1;
  in.num_points = point_count_surface(w);
  in.h2 = h2;
  in.r = r;
  in.ell = ell;
  in.galois_degree = galois_degree;
  in.unsafe_ell = unsafe;
  check_shape(in);
  if (unsafe) {
    in.ell_licensed = true;
  } else if (report != nullptr) {
    if (report->weil.q != w.q || report->weil.t1 != w.t1 ||
        report->weil.t2 != w.t2)
      fail(errc::invalid_weil_data,
           "classification report is for a different surface");
    in.ell_licensed = report->ell_max >= ell;
  } else {
    in.ell_licensed = false;
  }
  return in;
}

std::int64_t code_dimension(std::int64_t r, std::int64_t h2) {
  if (h2 % 2 != 0) fail(errc::odd_h2, "code_dimension: H^2 must be even");
  return r * r * h2 / 2;
}

std::int64_t relevance_threshold(std::int64_t h2) {
  if (h2 < 2 || h2 % 2 != 0)
    fail(errc::odd_h2, "relevance_threshold: H^2 must be even and >= 2");
  // ceil(4 (sqrt(H2)+1)^2) = 4 H2 + 4 + ceil(sqrt(64 H2)); exact since
  // 64 H2 is never a perfect square... when it is, the ceiling is exact too.
  return 4 * h2 + 4 +
         static_cast<std::int64_t>(
             isqrt_ceil(static_cast<std::uint64_t>(64 * h2)));
}

BoundResult bound_general(const BoundInput& in) {
  check_shape(in);
  const std::int64_t m = m_of(in.q);
  const std::int64_t q = in.q;
  // components cap k <= r H^2 / e (Galois refinement when e > 1)
  const std::int64_t kcap = (in.r * in.h2) / in.galois_degree;
  const std::int64_t nf = kcap * (q + 1 - in.t1 + m) + in.r * in.r * m * in.h2 / 2;
  BoundResult res;
  res.n = in.num_points;
  res.k = code_dimension(in.r, in.h2);
  res.nf_bound = nf;
  res.d_lower = in.num_points - nf;
  res.relevance_B = relevance_threshold(in.h2);
  res.vacuous = res.d_lower <= 0;
  res.theorem = res.vacuous ? BoundTheorem::Vacuous : BoundTheorem::General;
  res.injectivity_ok = res.d_lower >= 1;
  res.watermark_unsafe = false;
  return res;
}

PhiEvaluation phi(std::int64_t x, const BoundInput& in) {
  check_shape(in);
  const std::int64_t m = m_of(in.q);
  const std::int64_t a = in.r * in.r * in.h2 / 2;  // (r sqrt(H^2/2))^2
  QuadExact R = QuadExact::sqrt_of(static_cast<std::uint64_t>(a));
  QuadExact sl = QuadExact::sqrt_of(static_cast<std::uint64_t>(in.ell));
  if (x < 1) fail(errc::outside_polygon, "phi: x must be >= 1");
  QuadExact alpha = R - QuadExact(static_cast<long>(x)) * sl;
  if (alpha.sign() < 0)
    fail(errc::outside_polygon, "phi: (x,0) lies outside the polygon K");
  const std::int64_t ell = in.ell;
  QuadExact mq(static_cast<long>(m));
  QuadExact v = mq * alpha * alpha + QuadExact(2 * m) * sl * alpha +
                QuadExact(static_cast<long>(x)) *
                    (QuadExact(static_cast<long>(in.q + 1 - in.t1)) +
                     QuadExact(static_cast<long>(ell - 1)) *
                         (QuadExact(static_cast<long>(m)) - sl)) +
                R * QuadExact(static_cast<long>(ell - 1));
  PhiEvaluation ev;
  ev.x = x;
  ev.alpha = alpha;
  ev.value = v;
  return ev;
}

ClosedFormMax simple_closed_form_max(const BoundInput& in) {
  check_shape(in);
  const std::int64_t a = in.r * in.r * in.h2 / 2;
  const std::int64_t floor_R = floor_sqrt_ratio(a, 1);
  const std::int64_t x_right = floor_sqrt_ratio(a, in.ell);

  ClosedFormMax cf;
  QuadExact axis(static_cast<long>(floor_R * (in.ell - 1)));
  cf.value = axis;
  cf.winner = "k2-axis";
  cf.candidates.push_back(axis.to_string());
  if (x_right >= 1) {
    QuadExact p1 = phi(1, in).value;
    cf.candidates.push_back(p1.to_string());
    if (p1 > cf.value) {
      cf.value = p1;
      cf.winner = "phi(1)";
    }
    QuadExact pr = phi(x_right, in).value;
    cf.candidates.push_back(pr.to_string());
    if (pr > cf.value) {
      cf.value = pr;
      cf.winner = "phi(" + std::to_string(x_right) + ")";
    }
  }
  return cf;
}

BoundResult bound_simple(const BoundInput& in) {
  check_shape(in);
  if (!in.ell_licensed)
    fail(errc::unlicensed_ell,
         "bound_simple: ell not licensed by a classification");
  BoundResult res;
  res.n = in.num_points;
  res.k = code_dimension(in.r, in.h2);
  res.relevance_B = relevance_threshold(in.h2);
  res.watermark_unsafe = in.unsafe_ell;

  ClosedFormMax cf = simple_closed_form_max(in);
  res.candidates = cf.candidates;
  res.winner = cf.winner;
  res.nf_bound = floor_quad(cf.value);
  // integer distances: d >= ceil(#A - M) = #A - floor(M)
  res.d_lower = in.num_points - res.nf_bound;
  res.vacuous = res.d_lower <= 0;
  res.theorem = res.vacuous ? BoundTheorem::Vacuous : BoundTheorem::SimpleEll;
  res.injectivity_ok = res.d_lower >= 1;
  return res;
}

BoundResult bound_haloui(const BoundInput& in) {
  check_shape(in);
  if (in.h2 != 2 || in.ell != 1)
    fail(errc::wrong_specialization, "bound_haloui needs H^2 = 2 and ell = 1");
  const std::int64_t m = m_of(in.q);
  const std::int64_t q = in.q;
  const std::int64_t r = in.r;
  // r sqrt(H^2/2) = r here; threshold r <= (q+1-Tr-m)/m on integers
  std::int64_t nf;
  std::string winner;
  if (r * m <= q + 1 - in.t1 - m) {
    nf = r * (q + 1 - in.t1);
    winner = "first-branch";
  } else {
    nf = (q + 1 - in.t1 - m) + m * r * r;
    winner = "second-branch";
  }
  BoundResult res;
  res.n = in.num_points;
  res.k = code_dimension(r, in.h2);
  res.nf_bound = nf;
  res.d_lower = in.num_points - nf;
  res.relevance_B = relevance_threshold(in.h2);
  res.vacuous = res.d_lower <= 0;
  res.theorem = res.vacuous ? BoundTheorem::Vacuous : BoundTheorem::Haloui;
  res.injectivity_ok = res.d_lower >= 1;
  res.winner = winner;
  return res;
}

PolygonMax polygon_max_bruteforce(const BoundInput& in,
                                  PolygonObjective objective) {
  check_shape(in);
  const std::int64_t m = m_of(in.q);
  const std::int64_t ell = in.ell;
  const std::int64_t a = in.r * in.r * in.h2 / 2;
  QuadExact R = QuadExact::sqrt_of(static_cast<std::uint64_t>(a));
  QuadExact sl = QuadExact::sqrt_of(static_cast<std::uint64_t>(ell));
  const std::int64_t k1max = floor_sqrt_ratio(a, ell);

  PolygonMax best;
  bool have = false;
  for (std::int64_t k1 = 0; k1 <= k1max; ++k1) {
    QuadExact slack = R - QuadExact(static_cast<long>(k1)) * sl;
    std::int64_t k2max = floor_quad(slack);
    std::int64_t k2min = (k1 == 0) ? 1 : 0;
    for (std::int64_t k2 = k2min; k2 <= k2max; ++k2) {
      QuadExact value;
      if (k1 == 0) {
        value = QuadExact(static_cast<long>(k2 * (ell - 1)));
      } else {
        QuadExact alpha = slack - QuadExact(static_cast<long>(k2));
        value = QuadExact(static_cast<long>(m)) * alpha * alpha +
                QuadExact(static_cast<long>(2 * m)) * sl * alpha +
                QuadExact(static_cast<long>(k1)) *
                    (QuadExact(static_cast<long>(in.q + 1 - in.t1)) +
                     QuadExact(static_cast<long>(ell - 1)) *
                         (QuadExact(static_cast<long>(m)) - sl)) +
                R * QuadExact(static_cast<long>(ell - 1));
        if (objective == PolygonObjective::SharpenedEq13)
          value -= alpha * QuadExact(static_cast<long>(ell - 1));
      }
      if (!have || value > best.value) {
        best.value = value;
        best.k1 = k1;
        best.k2 = k2;
        have = true;
      }
    }
  }
  if (!have) fail(errc::outside_polygon, "polygon has no integer points");
  return best;
}

EllComparison compare_ell(const BoundInput& base, const std::vector<int>& ells) {
  EllComparison cmp;
  cmp.general = bound_general(base);
  std::int64_t best_d = cmp.general.vacuous ? INT64_MIN : cmp.general.d_lower;
  cmp.best_ell = 0;
  for (int ell : ells) {
    BoundInput in = base;
    in.ell = ell;
    EllComparisonRow row;
    row.ell = ell;
    row.hypothetical = !base.ell_licensed && !base.unsafe_ell;
    if (row.hypothetical) in.ell_licensed = true;  // flagged, not certified
    row.simple = bound_simple(in);
    if (!row.simple.vacuous && row.simple.d_lower > best_d) {
      best_d = row.simple.d_lower;
      cmp.best_ell = ell;
    }
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

const char* to_string(BoundTheorem t) {
  switch (t) {
    case BoundTheorem::General: return "General";
    case BoundTheorem::SimpleEll: return "Simple-l";
    case BoundTheorem::Haloui: return "Haloui";
    default: return "Vacuous";
  }
}

}  // namespace abelos
