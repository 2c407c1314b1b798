// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_QUADEXACT_HPP
#define ABELOS_CORE_QUADEXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace abelos {

// An exact element of the real field generated over Q by square roots of
// integers: a finite sum  sum_s  c_s * sqrt(s)  with rational c_s and
// squarefree radicands s >= 1. Radicands are kept squarefree canonically
// (sqrt(8) is stored as 2*sqrt(2)), so equality is coefficient-wise and the
// zero test is exact. Sign and floor are decided by refining rational
// interval enclosures of the radicals; refinement terminates because a
// nonzero element stays bounded away from zero.
//
// This houses every irrational quantity of the distance bounds:
// r*sqrt(H^2/2), sqrt(ell) and the slack alpha between them.
class QuadExact {
 public:
  QuadExact() = default;
  QuadExact(long v) { set_term(1, mpq_class(v)); }          // NOLINT
  explicit QuadExact(const mpq_class& v) { set_term(1, v); }

  // Exact sqrt(k) for integer k >= 0 (squarefree-decomposed).
  static QuadExact sqrt_of(std::uint64_t k);
  // r * sqrt(num/den) for nonnegative rational num/den with den | num * den
  // made exact by scaling: sqrt(num/den) = sqrt(num*den)/den.
  static QuadExact sqrt_of_rational(std::uint64_t num, std::uint64_t den);

  QuadExact operator+(const QuadExact& o) const;
  QuadExact operator-(const QuadExact& o) const;
  QuadExact operator*(const QuadExact& o) const;
  QuadExact operator-() const;

  QuadExact& operator+=(const QuadExact& o) { return *this = *this + o; }
  QuadExact& operator-=(const QuadExact& o) { return *this = *this - o; }
  QuadExact& operator*=(const QuadExact& o) { return *this = *this * o; }

  bool operator==(const QuadExact& o) const { return terms_ == o.terms_; }
  bool operator!=(const QuadExact& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Rational part (coefficient of sqrt(1)).
  mpq_class rational_part() const;

  // Exact sign: -1, 0, +1.
  int sign() const;
  bool operator<(const QuadExact& o) const { return (*this - o).sign() < 0; }
  bool operator>(const QuadExact& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const QuadExact& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const QuadExact& o) const { return (*this - o).sign() >= 0; }

  // Exact floor as an integer.
  mpz_class floor() const;

  // Decimal enclosure [lo, hi] with 10^-digits width, for display.
  std::string to_decimal(unsigned digits = 12) const;
  // Symbolic rendering like "84 - 1*sqrt(2)".
  std::string to_string() const;

 private:
  // radicand (squarefree, >= 1) -> coefficient
  std::map<std::uint64_t, mpq_class> terms_;

  void set_term(std::uint64_t rad, const mpq_class& c);
  void add_term(std::uint64_t rad, const mpq_class& c);
  // Rational enclosure at 2^-prec granularity on each radical.
  void enclosure(unsigned long prec, mpq_class& lo, mpq_class& hi) const;
};

}  // namespace abelos

#endif
