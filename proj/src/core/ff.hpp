// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_FF_HPP
#define ABELOS_CORE_FF_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace abelos {

// Largest field size we construct: q = p^n <= 2^20.
inline constexpr std::uint64_t kFieldSizeCap = std::uint64_t(1) << 20;
// Largest |x| accepted by trial_factor.
inline constexpr std::uint64_t kFactorCap = std::uint64_t(1) << 40;

// Floor of the integer square root; exact, no floating point anywhere.
std::uint64_t isqrt_floor(std::uint64_t x);

// Smallest s with s*s >= x.
std::uint64_t isqrt_ceil(std::uint64_t x);

bool is_prime(std::uint64_t p);

// Complete prime factorization of |x| by trial division, ascending with
// multiplicity. Throws zero_input on x = 0, too_large beyond 2^40.
std::vector<std::uint64_t> trial_factor(std::int64_t x);

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
};

// A small finite field F_{p^n}. Elements are canonical indices in [0, q):
// the index encodes the coordinate vector (c0, ..., c_{n-1}) over F_p in the
// power basis of the modulus, little-endian base p. The modulus is the
// lexicographically smallest monic irreducible of degree n, so indices are
// reproducible across runs. Immutable after construction; safe to share.
class Field {
 public:
  using elt = std::uint32_t;

  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const { return pp_.p; }
  std::uint32_t n() const { return pp_.n; }
  std::uint32_t q() const { return pp_.q; }
  const PrimePower& prime_power() const { return pp_; }

  // Monic modulus coefficients, low to high, length n+1 (n > 1 only; for
  // prime fields this is {?, 1} shaped as x - 0 and unused).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  elt zero() const { return 0; }
  elt one() const { return 1; }

  elt add(elt a, elt b) const;
  elt sub(elt a, elt b) const;
  elt neg(elt a) const;
  elt mul(elt a, elt b) const;
  elt inv(elt a) const;
  elt pow(elt a, std::uint64_t e) const;

  // Image of an integer under Z -> F_p -> F_q.
  elt from_int(std::int64_t v) const;

  // Number of y in F_q with y^2 + h*y = c; always 0, 1 or 2.
  int count_quadratic_roots(elt h, elt c) const;

  // Coordinates of a over F_p, little-endian, length n.
  std::vector<std::uint32_t> coords(elt a) const;

  // "c0+c1*t+..." (just the integer for prime fields).
  std::string to_string(elt a) const;

  // Evaluate a polynomial (coefficients low to high, entries already field
  // elements) at x.
  elt eval_poly(const std::vector<elt>& coeffs, elt x) const;

  // Embedding table of this field into `big` (same p, n | big.n): table[a] is
  // the image of a. Deterministic: the power-basis generator maps to the
  // smallest-index root of our modulus in `big`.
  std::vector<elt> embed_into(const Field& big) const;

 private:
  Field() = default;

  PrimePower pp_;
  std::vector<std::uint32_t> modulus_;
  // Discrete log tables for extension fields: exp_[i] = g^i, log_[a].
  std::vector<elt> exp_;
  std::vector<std::uint32_t> log_;

  elt mul_raw(elt a, elt b) const;  // polynomial multiply + reduce
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace abelos

#endif
