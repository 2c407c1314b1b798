// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_ISOGENY_HPP
#define ABELOS_CORE_ISOGENY_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace abelos {

// Isogeny-class invariant of an abelian surface over F_q: the Weil polynomial
//   f_A(t) = t^4 - t1*t^3 + t2*t^2 - q*t1*t + q^2
// in trace-form signs. The alternative (a, b) convention with
// f(t) = t^4 + a*t^3 + b*t^2 + q*a*t + q^2 is (a, b) = (-t1, t2) and appears
// only inside the principal-polarization test.
struct SurfaceWeilData {
  std::uint32_t q = 0;
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
};

// True iff every complex root of the quartic has |root|^2 within 1e-9
// relative tolerance of q. Roots via the substitution u = t + q/t, which
// reduces to u^2 - t1*u + (t2 - 2q) = 0 followed by t^2 - u*t + q = 0.
bool validate_weil_surface(std::uint32_t q, std::int64_t t1, std::int64_t t2);
inline bool validate_weil_surface(const SurfaceWeilData& w) {
  return validate_weil_surface(w.q, w.t1, w.t2);
}

// #A(F_q) = f_A(1) = 1 - t1 + t2 - q*t1 + q^2. Throws invalid_weil_data.
std::int64_t point_count_surface(const SurfaceWeilData& w);

// Not principally polarizable: with (a,b) = (-t1,t2), true iff a^2 - b = q,
// b < 0 and every prime divisor of b is congruent to 1 mod 3.
bool is_npp(const SurfaceWeilData& w);

// The Weil restriction of an elliptic curve over F_{q^2} of trace trE:
// f_A(t) = f_E(t^2), so (q, 0, -trE). Requires trE^2 <= 4q^2.
SurfaceWeilData weil_restriction(std::uint32_t q, std::int64_t tr_e);

// Deuring existence: some elliptic curve over F_{q^2} (q2 = q^2) has trace
// beta iff |beta| <= 2q with gcd(beta, p) = 1, or beta = +-2q, or
// beta = +-q with p != 1 mod 3.
bool deuring_trace_exists(std::uint32_t p, std::uint64_t q2, std::int64_t beta);

enum class SimpleStatus { Simple, NotSimple, Undetermined };

// Sufficient simplicity test on the quartic over Q: Simple when irreducible
// (no integer root dividing q^2 and no factorization into two integer monic
// quadratics), NotSimple when it splits as two elliptic Weil quadratics
// t^2 - ti*t + q with ti^2 <= 4q, Undetermined otherwise.
SimpleStatus is_simple_sufficient(const SurfaceWeilData& w);

const char* to_string(SimpleStatus s);

// Metadata carried by surfaces constructed as Weil restrictions; needed to
// recognize the trace-condition cases granting ell = 2.
struct WeilRestrictionMeta {
  std::uint32_t p = 0;   // characteristic
  std::uint32_t q = 0;   // base field size, A lives over F_q, E over F_{q^2}
  std::int64_t tr_e = 0; // trace of E over F_{q^2}
};

struct ClassificationReport {
  SurfaceWeilData weil;
  bool valid = false;
  SimpleStatus simplicity = SimpleStatus::Undetermined;
  bool npp = false;
  int ell_max = 0;    // 0 = no guarantee, 1 = no genus <= 1, 2 = no genus <= 2
  std::string rule;   // "npp" | "prop45-case-k" | "simple" | "none"
};

// Classification granting the sharper ell in the minimum-distance bound:
// ell_max = 2 iff NPP or a matching Weil-restriction trace case, ell_max = 1
// iff recognizably simple, else no guarantee.
ClassificationReport classify_no_low_genus(
    const SurfaceWeilData& w,
    const std::optional<WeilRestrictionMeta>& provenance = std::nullopt);

}  // namespace abelos

#endif
