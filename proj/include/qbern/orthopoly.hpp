#pragma once

// Monic orthogonal polynomial families given by three-term recurrences
//   p_{n+1} = (a_n + x) p_n - b_n p_{n-1},   p_{-1} = 0, p_0 = 1,
// their moments, and the basic hypergeometric closed forms of the q-Hahn,
// big q-Legendre and big q-Jacobi families evaluated at q^a (1 + (q-1) x).
//
// Sign convention: b_n is always stored with the minus sign above, so the
// Hankel product formula is prod b_k^(n-k) with no extra signs.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qbern/bernoulli.hpp"
#include "qbern/field_q.hpp"
#include "qbern/field_qz.hpp"
#include "qbern/qcombinat.hpp"

namespace qbern {

template <class K>
struct Recurrence {
  std::function<K(long)> a;  // n >= 0
  std::function<K(long)> b;  // n >= 1
};

/// Recurrence of p_n(x) = r_n(A x + B) / A^n where r_n follows `rec`:
/// a'_n = (a_n + B)/A, b'_n = b_n / A^2.
template <class K>
Recurrence<K> affine_transform(const Recurrence<K>& rec, const K& A, const K& B) {
  if (qbern::is_zero(A)) throw std::invalid_argument("affine_transform: A must be nonzero");
  const K a2 = A * A;
  return {[a = rec.a, A, B](long n) { return (a(n) + B) / A; },
          [b = rec.b, a2](long n) { return b(n) / a2; }};
}

/// Moments of the transformed family from those of the original:
/// mu_n = A^-n sum_k binom(n,k) (-B)^(n-k) nu_k.
template <class K>
std::vector<K> affine_moments(const std::vector<K>& nu, const K& A, const K& B) {
  std::vector<K> mu;
  const K inv_a = K(1) / A;
  K inv_a_pow(1);
  for (std::size_t n = 0; n < nu.size(); ++n) {
    K acc(0);
    K neg_b_pow(1);  // (-B)^(n-k), built from k = n downward
    for (std::size_t k = n + 1; k-- > 0;) {
      acc += K(FieldQ(binomial(static_cast<long>(n), static_cast<long>(k)))) * neg_b_pow * nu[k];
      neg_b_pow *= -B;
    }
    mu.push_back(acc * inv_a_pow);
    inv_a_pow *= inv_a;
  }
  return mu;
}

/// p_0 .. p_{count-1}.
template <class K>
std::vector<Poly<K>> generate_polys(const Recurrence<K>& rec, std::size_t count) {
  std::vector<Poly<K>> p;
  if (count == 0) return p;
  p.emplace_back(K(1));
  Poly<K> prev;
  const Poly<K> x = Poly<K>::variable();
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const long ln = static_cast<long>(n);
    Poly<K> next = (x + Poly<K>(rec.a(ln))) * p[n];
    if (n > 0) next -= p[n - 1] * rec.b(ln);
    p.push_back(std::move(next));
  }
  return p;
}

/// mu_0 .. mu_{count-1} with mu_0 = 1, by iterating multiplication by x in the
/// basis p_k (x p_k = p_{k+1} - a_k p_k + b_k p_{k-1}) and reading the p_0
/// coordinate.
template <class K>
std::vector<K> moments_from_recurrence(const Recurrence<K>& rec, std::size_t count) {
  std::vector<K> a, b;
  for (std::size_t k = 0; k < count; ++k) {
    a.push_back(rec.a(static_cast<long>(k)));
    b.push_back(k == 0 ? K(0) : rec.b(static_cast<long>(k)));
  }
  std::vector<K> moments;
  std::vector<K> v{K(1)};
  for (std::size_t n = 0; n < count; ++n) {
    moments.push_back(v[0]);
    if (n + 1 == count) break;
    // Coordinates above count - n are never read back into v[0].
    const std::size_t keep = std::min(v.size() + 1, count - n);
    std::vector<K> w(keep, K(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (qbern::is_zero(v[k])) continue;
      if (k + 1 < keep) w[k + 1] += v[k];
      if (k < keep) w[k] -= a[k] * v[k];
      if (k > 0 && k - 1 < keep) w[k - 1] += b[k] * v[k];
    }
    v = std::move(w);
  }
  return moments;
}

/// Raw q-Hahn recurrence (before the change of variables): a_n = A_n + C_n - 1,
/// b_n = A_{n-1} C_n.
Recurrence<FieldQ> raw_hahn_recurrence(long c, long d);
/// q-Hahn family at q(1 + (q-1)x), from A_n and C_n.
Recurrence<FieldQ> hahn_recurrence(long c, long d);
/// Simplified closed forms for (c,d) = (0,0), (0,1), (1,1).
Recurrence<FieldQ> hahn_recurrence_00();
Recurrence<FieldQ> hahn_recurrence_01();
Recurrence<FieldQ> hahn_recurrence_11();

/// Big q-Legendre family at q(1 + (q-1)x) with symbolic parameter z: the
/// simplified closed form.
Recurrence<FieldQZ> legendre_recurrence();
/// Same family from the raw A_n, C_n with c = 1 + (q-1)z.
Recurrence<FieldQZ> legendre_recurrence_from_raw();

/// Big q-Jacobi family at q^a(1 + (q-1)x).
Recurrence<FieldQ> raw_jacobi_recurrence(const GeneralParams& p);
Recurrence<FieldQ> jacobi_recurrence(const GeneralParams& p);
/// Closed form of b_n for jacobi_recurrence (n >= 1).
FieldQ jacobi_b_closed(const GeneralParams& p, long n);

struct HahnFamily {
  long c = 0;
  long d = 0;
};
struct LegendreFamily {};
struct JacobiFamily {
  GeneralParams params;
};
using FamilySpec = std::variant<HahnFamily, LegendreFamily, JacobiFamily>;

/// Terminating 3phi2 closed forms P_n (not monic).
PolyX hypergeometric_pn(const HahnFamily& f, long n);
PolyXZ hypergeometric_pn(const LegendreFamily& f, long n);
PolyX hypergeometric_pn(const JacobiFamily& f, long n);

/// Leading x-coefficient of the q-Hahn P_n:
/// q^n (q-1)^n (q^{n+c+d+1}; q)_n / ((q^{c+1}; q)_n (q^{d+1}; q)_n).
FieldQ hahn_leading_coefficient(long c, long d, long n);

/// The linear functional whose moments a family realizes, applied to f:
/// Psi(x^2 Desc(x,c-1) Desc(x,d-1) f) for q-Hahn, the general weight for
/// big q-Jacobi, and f -> sum f_n legendre_moment(n) for big q-Legendre.
FieldQ family_functional(const HahnFamily& f, const PolyX& poly);
FieldQZ family_functional(const LegendreFamily& f, const PolyXZ& poly);
FieldQ family_functional(const JacobiFamily& f, const PolyX& poly);

/// Moments nu_n = q^n [n+1]_c / [n+1]_q of the raw big q-Legendre family,
/// computed as normalized Jackson integrals over [cq, q].
std::vector<FieldQZ> legendre_jackson_moments(std::size_t count);

template <class K>
Poly<K> monicize(const Poly<K>& p) {
  return p.monic();
}

}  // namespace qbern
