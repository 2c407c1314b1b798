// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "ff.hpp"

#include <algorithm>

namespace abelos {

std::uint64_t isqrt_floor(std::uint64_t x) {
  if (x < 2) return x;
  // Newton iteration from a safe overestimate.
  std::uint64_t s = x;
  std::uint64_t t = (s + 1) / 2;
  while (t < s) {
    s = t;
    t = (s + x / s) / 2;
  }
  while (s > 0 && s > x / s) --s;  // guard against rounding up
  while ((s + 1) <= x / (s + 1)) ++s;
  return s;
}

std::uint64_t isqrt_ceil(std::uint64_t x) {
  std::uint64_t s = isqrt_floor(x);
  return s * s == x ? s : s + 1;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> trial_factor(std::int64_t x) {
  if (x == 0) fail(errc::zero_input, "trial_factor: x must be nonzero");
  std::uint64_t v = x < 0 ? static_cast<std::uint64_t>(-x)
                          : static_cast<std::uint64_t>(x);
  if (v > kFactorCap) fail(errc::too_large, "trial_factor: |x| exceeds 2^40");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    while (v % d == 0) {
      out.push_back(d);
      v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

namespace {

// --- polynomial arithmetic over F_p (coefficients 0..p-1, low to high) ---

using Poly = std::vector<std::uint32_t>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f,
                 std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  // reduce mod monic f
  std::size_t n = f.size() - 1;
  for (std::size_t i = c.size(); i-- > n;) {
    std::uint64_t lead = c[i] % p;
    if (lead == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t sub = lead * f[j] % p;
      c[i - n + j] = (c[i - n + j] + p - sub) % p;
    }
    c[i] = 0;
  }
  Poly r(n, 0);
  for (std::size_t i = 0; i < n && i < c.size(); ++i)
    r[i] = static_cast<std::uint32_t>(c[i] % p);
  return poly_trim(r);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
               nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p)
                                          : t);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    std::uint64_t binv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t lead = a.back() % p;
      if (lead != 0) {
        std::uint64_t c = lead * binv % p;
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
          std::uint64_t sub = c * b[j] % p;
          a[off + j] =
              static_cast<std::uint32_t>((a[off + j] + p - sub) % p);
        }
      }
      a.pop_back();
      a = poly_trim(std::move(a));
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Irreducibility over F_p: f monic of degree n. Standard criterion via
// x^(p^n) = x mod f and gcd(x^(p^(n/d)) - x, f) = 1 for prime d | n.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
  std::size_t n = f.size() - 1;
  Poly x{0, 1};
  // x^(p^k) computed by iterating the Frobenius
  auto frob_iter = [&](std::size_t k) {
    Poly g = x;
    for (std::size_t i = 0; i < k; ++i) g = poly_powmod(g, p, f, p);
    return g;
  };
  Poly xpn = frob_iter(n);
  if (poly_trim(xpn) != poly_trim(x)) {
    // need x^(p^n) == x
    return false;
  }
  auto primes = trial_factor(static_cast<std::int64_t>(n));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::uint64_t d : primes) {
    Poly g = frob_iter(n / d);
    // g - x
    Poly diff = g;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    Poly gc = poly_gcd(diff, f, p);
    if (poly_trim(gc).size() > 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) fail(errc::composite_p, "make_field: p is not prime");
  if (n == 0) fail(errc::invalid_weil_data, "make_field: n must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kFieldSizeCap) fail(errc::too_large, "make_field: p^n > 2^20");
  }

  auto F = std::shared_ptr<Field>(new Field());
  F->pp_ = {p, n, static_cast<std::uint32_t>(q)};

  if (n == 1) {
    F->modulus_ = {0, 1};  // x
    return F;
  }

  // Lexicographically smallest monic irreducible: candidates ordered by the
  // integer whose base-p digits are (c_{n-1}, ..., c_0) from most to least
  // significant.
  Poly f(n + 1, 0);
  f[n] = 1;
  bool found = false;
  std::uint64_t pn = q;  // p^n candidates for the lower coefficients
  for (std::uint64_t k = 0; k < pn; ++k) {
    std::uint64_t v = k;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[n - 1 - i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (f[0] == 0) continue;  // divisible by x
    if (poly_irreducible(f, p)) {
      found = true;
      break;
    }
  }
  if (!found) fail(errc::invalid_weil_data, "make_field: no irreducible found");
  F->modulus_ = f;

  // Discrete-log tables via a multiplicative generator.
  std::uint32_t Q = F->pp_.q;
  F->exp_.assign(Q - 1, 0);
  F->log_.assign(Q, 0);
  auto ord_factors = trial_factor(static_cast<std::int64_t>(Q - 1));
  std::sort(ord_factors.begin(), ord_factors.end());
  ord_factors.erase(std::unique(ord_factors.begin(), ord_factors.end()),
                    ord_factors.end());
  for (std::uint32_t g = 1; g < Q; ++g) {
    bool gen = true;
    for (std::uint64_t d : ord_factors) {
      // g^((Q-1)/d) == 1 ?
      std::uint64_t e = (Q - 1) / d;
      elt r = 1, b = g;
      while (e) {
        if (e & 1) r = F->mul_raw(r, b);
        b = F->mul_raw(b, b);
        e >>= 1;
      }
      if (r == 1) {
        gen = false;
        break;
      }
    }
    if (!gen) continue;
    elt cur = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i < Q - 1; ++i) {
      F->exp_[i] = cur;
      F->log_[cur] = i;
      cur = F->mul_raw(cur, g);
    }
    if (ok) break;
  }
  return F;
}

Field::elt Field::add(elt a, elt b) const {
  std::uint32_t p = pp_.p;
  if (pp_.n == 1) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  if (p == 2) return a ^ b;
  elt r = 0;
  std::uint32_t mul = 1;
  for (std::uint32_t i = 0; i < pp_.n; ++i) {
    std::uint32_t da = a % p, db = b % p;
    a /= p;
    b /= p;
    std::uint32_t s = da + db;
    if (s >= p) s -= p;
    r += s * mul;
    mul *= p;
  }
  return r;
}

Field::elt Field::neg(elt a) const {
  std::uint32_t p = pp_.p;
  if (pp_.n == 1) return a == 0 ? 0 : p - a;
  if (p == 2) return a;
  elt r = 0;
  std::uint32_t mul = 1;
  for (std::uint32_t i = 0; i < pp_.n; ++i) {
    std::uint32_t d = a % p;
    a /= p;
    r += (d == 0 ? 0 : p - d) * mul;
    mul *= p;
  }
  return r;
}

Field::elt Field::sub(elt a, elt b) const { return add(a, neg(b)); }

Field::elt Field::mul_raw(elt a, elt b) const {
  std::uint32_t p = pp_.p, n = pp_.n;
  if (n == 1) return static_cast<elt>(std::uint64_t(a) * b % p);
  std::uint32_t da[24], db[24];
  std::uint64_t c[48] = {0};
  for (std::uint32_t i = 0; i < n; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j)
      c[i + j] += std::uint64_t(da[i]) * db[j];
  }
  // reduce modulo the monic modulus
  for (std::uint32_t i = 2 * n - 1; i-- > n;) {
    std::uint64_t lead = c[i] % p;
    c[i] = 0;
    if (lead == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint64_t sub = lead * modulus_[j] % p;
      c[i - n + j] += p - sub;
    }
  }
  elt r = 0;
  std::uint32_t mulc = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    r += static_cast<std::uint32_t>(c[i] % p) * mulc;
    mulc *= p;
  }
  return r;
}

Field::elt Field::mul(elt a, elt b) const {
  if (pp_.n == 1) return static_cast<elt>(std::uint64_t(a) * b % pp_.p);
  if (a == 0 || b == 0) return 0;
  std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
  if (s >= pp_.q - 1) s -= pp_.q - 1;
  return exp_[s];
}

Field::elt Field::inv(elt a) const {
  if (a == 0) fail(errc::zero_input, "inv: zero has no inverse");
  if (pp_.n == 1) return static_cast<elt>(inv_mod_p(a, pp_.p));
  std::uint32_t l = log_[a];
  return l == 0 ? 1 : exp_[pp_.q - 1 - l];
}

Field::elt Field::pow(elt a, std::uint64_t e) const {
  elt r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::elt Field::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(pp_.p);
  if (m < 0) m += pp_.p;
  return static_cast<elt>(m);
}

int Field::count_quadratic_roots(elt h, elt c) const {
  if (pp_.p == 2) {
    if (h == 0) return 1;  // squaring is a bijection
    // y = h z reduces to z^2 + z = c / h^2; solvable iff absolute trace is 0
    elt z = mul(c, inv(mul(h, h)));
    elt tr = 0, t = z;
    for (std::uint32_t i = 0; i < pp_.n; ++i) {
      tr = add(tr, t);
      t = mul(t, t);
    }
    if (tr != 0) return 0;
    return 2;
  }
  // odd characteristic: complete the square; discriminant h^2 + 4c
  elt disc = add(mul(h, h), mul(from_int(4), c));
  if (disc == 0) return 1;
  elt chi = pow(disc, (pp_.q - 1) / 2);
  return chi == 1 ? 2 : 0;
}

std::vector<std::uint32_t> Field::coords(elt a) const {
  std::vector<std::uint32_t> out(pp_.n);
  for (std::uint32_t i = 0; i < pp_.n; ++i) {
    out[i] = a % pp_.p;
    a /= pp_.p;
  }
  return out;
}

std::string Field::to_string(elt a) const {
  if (pp_.n == 1) return std::to_string(a);
  auto cs = coords(a);
  std::string s;
  for (std::uint32_t i = 0; i < pp_.n; ++i) {
    if (i) s += "+";
    s += std::to_string(cs[i]);
    if (i == 1) s += "*t";
    if (i > 1) s += "*t^" + std::to_string(i);
  }
  return s;
}

Field::elt Field::eval_poly(const std::vector<elt>& coeffs, elt x) const {
  elt r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = add(mul(r, x), coeffs[i]);
  return r;
}

std::vector<Field::elt> Field::embed_into(const Field& big) const {
  if (big.p() != pp_.p || big.n() % pp_.n != 0)
    fail(errc::invalid_weil_data, "embed_into: incompatible fields");
  if (big.n() == pp_.n && big.q() == pp_.q) {
    std::vector<elt> id(pp_.q);
    for (std::uint32_t a = 0; a < pp_.q; ++a) id[a] = a;
    return id;
  }
  // image of the power-basis generator: smallest root of our modulus in big
  std::vector<elt> modim(modulus_.size());
  for (std::size_t i = 0; i < modulus_.size(); ++i)
    modim[i] = big.from_int(modulus_[i]);
  elt root = 0;
  bool found = false;
  for (std::uint32_t x = 0; x < big.q(); ++x) {
    if (big.eval_poly(modim, x) == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found && pp_.n > 1)
    fail(errc::invalid_weil_data, "embed_into: modulus has no root upstairs");
  std::vector<elt> table(pp_.q);
  for (std::uint32_t a = 0; a < pp_.q; ++a) {
    auto cs = coords(a);
    elt im = 0, tp = 1;
    for (std::uint32_t i = 0; i < pp_.n; ++i) {
      im = big.add(im, big.mul(big.from_int(cs[i]), tp));
      tp = big.mul(tp, root);
    }
    table[a] = im;
  }
  return table;
}

}  // namespace abelos
