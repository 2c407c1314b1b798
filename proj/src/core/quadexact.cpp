// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "quadexact.hpp"

#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "ff.hpp"

namespace abelos {

namespace {

// k = s * f^2 with s squarefree; returns (s, f).
std::pair<std::uint64_t, std::uint64_t> squarefree_decompose(std::uint64_t k) {
  std::uint64_t s = 1, f = 1;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d) continue;
    unsigned e = 0;
    while (k % d == 0) {
      k /= d;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) f *= d;
    if (e % 2) s *= d;
  }
  s *= k;  // leftover prime
  return {s, f};
}

}  // namespace

void QuadExact::set_term(std::uint64_t rad, const mpq_class& c) {
  if (c != 0) terms_[rad] = c;
}

void QuadExact::add_term(std::uint64_t rad, const mpq_class& c) {
  auto it = terms_.find(rad);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(rad, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QuadExact QuadExact::sqrt_of(std::uint64_t k) {
  QuadExact r;
  if (k == 0) return r;
  auto [s, f] = squarefree_decompose(k);
  r.set_term(s, mpq_class(static_cast<unsigned long>(f)));
  return r;
}

QuadExact QuadExact::sqrt_of_rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) fail(errc::zero_input, "sqrt_of_rational: zero denominator");
  // sqrt(num/den) = sqrt(num*den) / den
  QuadExact r = sqrt_of(num * den);
  for (auto& [rad, c] : r.terms_) c /= static_cast<unsigned long>(den);
  return r;
}

QuadExact QuadExact::operator+(const QuadExact& o) const {
  QuadExact r = *this;
  for (const auto& [rad, c] : o.terms_) r.add_term(rad, c);
  return r;
}

QuadExact QuadExact::operator-() const {
  QuadExact r = *this;
  for (auto& [rad, c] : r.terms_) c = -c;
  return r;
}

QuadExact QuadExact::operator-(const QuadExact& o) const {
  return *this + (-o);
}

QuadExact QuadExact::operator*(const QuadExact& o) const {
  QuadExact r;
  for (const auto& [ra, ca] : terms_) {
    for (const auto& [rb, cb] : o.terms_) {
      // sqrt(ra)*sqrt(rb) = g * sqrt(ra*rb/g^2), g = gcd(ra, rb)
      std::uint64_t g = std::gcd(ra, rb);
      std::uint64_t rad = (ra / g) * (rb / g);
      mpq_class c = ca * cb * mpq_class(static_cast<unsigned long>(g));
      r.add_term(rad, c);
    }
  }
  return r;
}

bool QuadExact::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == 1);
}

mpq_class QuadExact::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void QuadExact::enclosure(unsigned long prec, mpq_class& lo,
                          mpq_class& hi) const {
  lo = 0;
  hi = 0;
  mpz_class scale = mpz_class(1) << prec;
  for (const auto& [rad, c] : terms_) {
    mpq_class rlo, rhi;
    if (rad == 1) {
      rlo = rhi = 1;
    } else {
      mpz_class t = mpz_class(static_cast<unsigned long>(rad)) << (2 * prec);
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
      rlo = mpq_class(s) / scale;
      rhi = mpq_class(s + 1) / scale;
      rlo.canonicalize();
      rhi.canonicalize();
    }
    if (c > 0) {
      lo += c * rlo;
      hi += c * rhi;
    } else {
      lo += c * rhi;
      hi += c * rlo;
    }
  }
}

int QuadExact::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  for (unsigned long prec = 16;; prec *= 2) {
    mpq_class lo, hi;
    enclosure(prec, lo, hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (prec > (1u << 20))
      fail(errc::too_large, "QuadExact::sign: refinement did not separate");
  }
}

mpz_class QuadExact::floor() const {
  if (is_rational()) {
    mpq_class v = rational_part();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f;
  }
  for (unsigned long prec = 16;; prec *= 2) {
    mpq_class lo, hi;
    enclosure(prec, lo, hi);
    mpz_class flo, fhi;
    mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (flo == fhi) return flo;
    if (prec > (1u << 20))
      fail(errc::too_large, "QuadExact::floor: refinement did not converge");
  }
}

std::string QuadExact::to_decimal(unsigned digits) const {
  // enclose to ~3.33 bits per digit, then print the midpoint truncated
  unsigned long prec = 4 * digits + 16;
  mpq_class lo, hi;
  enclosure(prec, lo, hi);
  mpq_class mid = (lo + hi) / 2;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpq_class scaled = mid * mpq_class(scale);
  mpz_class ip;
  mpz_fdiv_q(ip.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  bool negative = ip < 0;
  if (negative) ip = -ip;
  std::string s = ip.get_str();
  while (s.size() <= digits) s = "0" + s;
  s.insert(s.size() - digits, ".");
  if (negative) s = "-" + s;
  return s;
}

std::string QuadExact::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [rad, c] : terms_) {
    mpq_class a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (rad == 1)
      os << a;
    else
      os << a << "*sqrt(" << rad << ")";
  }
  return os.str();
}

}  // namespace abelos
