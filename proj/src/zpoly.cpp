#include "qbern/zpoly.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>

namespace qbern::zpoly {

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_one(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a.size() >= b.size() ? a : b;
  const ZPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

ZPoly linear_combination(const ZPoly& a, const mpz_class& sa, const ZPoly& b,
                         const mpz_class& sb) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_mul(r[i].get_mpz_t(), a[i].get_mpz_t(), sa.get_mpz_t());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    mpz_addmul(r[i].get_mpz_t(), b[i].get_mpz_t(), sb.get_mpz_t());
  }
  trim(r);
  return r;
}

void negate(ZPoly& p) {
  for (auto& c : p) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return 0;
  mpz_class g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

bool divides(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) throw std::invalid_argument("zpoly::divides: zero divisor");
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  const int da = degree(a);
  const int db = degree(b);
  if (da < db) return false;
  ZPoly r = a;
  ZPoly q(da - db + 1);
  const mpz_class& lead = b.back();
  mpz_class t;
  for (int i = da - db; i >= 0; --i) {
    mpz_class& top = r[i + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[i + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    q[i] = t;
  }
  for (int i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) return false;
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return true;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!divides(a, b, &q)) {
    throw std::logic_error("zpoly::divexact: divisor does not divide");
  }
  return q;
}

namespace {

// Pseudo-remainder lc(b)^(da-db+1) * a mod b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  const mpz_class& lead = b.back();
  while (degree(a) >= db && !a.empty()) {
    const int shift = degree(a) - db;
    mpz_class top = a.back();
    for (auto& c : a) c *= lead;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 base, u64 e, u64 p) {
  u64 r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u32(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2u, 3u, 5u, 7u}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Bases {2,3,5,7} are deterministic below 3,215,031,751.
  for (u64 a : {2u, 3u, 5u, 7u}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<u64>& modular_primes() {
  static const std::vector<u64> table = [] {
    std::vector<u64> ps;
    ps.reserve(4000);
    for (u64 n = (u64{1} << 31) - 1; ps.size() < 4000; n -= 2) {
      if (is_prime_u32(n)) ps.push_back(n);
    }
    return ps;
  }();
  return table;
}

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  }
  trim(r);
  return r;
}

// a mod b over GF(p); b nonzero.
void mod_in_place(ModPoly& a, const ModPoly& b, u64 p) {
  const int db = static_cast<int>(b.size()) - 1;
  const u64 inv = invmod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const u64 t = mulmod(a.back(), inv, p);
    for (int j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(t, b[j], p)) % p;
    }
    trim(a);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    mod_in_place(a, b, p);
    std::swap(a, b);
  }
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

}  // namespace

ZPoly gcd_prs(const ZPoly& a, const ZPoly& b) {
  ZPoly x = a;
  ZPoly y = b;
  make_primitive(x);
  make_primitive(y);
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  return x;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = a;
  ZPoly y = b;
  make_primitive(x);
  make_primitive(y);
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (degree(x) == 0 || degree(y) == 0) return {1};
  if (x == y) return x;

  mpz_class lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), x.back().get_mpz_t(), y.back().get_mpz_t());

  ZPoly image;
  mpz_class modulus;
  int degree_bound = INT_MAX;
  for (u64 p : modular_primes()) {
    if (mpz_divisible_ui_p(x.back().get_mpz_t(), p) ||
        mpz_divisible_ui_p(y.back().get_mpz_t(), p)) {
      continue;
    }
    ModPoly h = gcd_mod(reduce(x, p), reduce(y, p), p);
    const int d = static_cast<int>(h.size()) - 1;
    if (d == 0) return {1};
    if (d > degree_bound) continue;
    const u64 scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
    for (auto& c : h) c = mulmod(c, scale, p);

    if (d < degree_bound) {
      degree_bound = d;
      modulus = static_cast<unsigned long>(p);
      image.assign(h.size(), 0);
      for (std::size_t i = 0; i < h.size(); ++i) {
        image[i] = static_cast<unsigned long>(h[i]);
        if (2 * h[i] > p) image[i] -= static_cast<unsigned long>(p);
      }
      continue;
    }

    const u64 m_inv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    const mpz_class next_modulus = modulus * static_cast<unsigned long>(p);
    bool changed = false;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const u64 cur = mpz_fdiv_ui(image[i].get_mpz_t(), p);
      const u64 t = mulmod((h[i] + p - cur) % p, m_inv, p);
      if (t == 0) continue;
      changed = true;
      mpz_addmul_ui(image[i].get_mpz_t(), modulus.get_mpz_t(), t);
      if (2 * image[i] > next_modulus) image[i] -= next_modulus;
    }
    modulus = next_modulus;
    if (changed) continue;

    ZPoly candidate = image;
    make_primitive(candidate);
    if (divides(x, candidate, nullptr) && divides(y, candidate, nullptr)) {
      return candidate;
    }
  }
  return gcd_prs(x, y);
}

}  // namespace qbern::zpoly
