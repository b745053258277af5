#pragma once

// Carlitz q-Bernoulli numbers and polynomials, the moment functional Psi,
// generating series with their functional equations, and the weighted
// functionals whose moments are big q-Jacobi moments.

#include <mutex>
#include <vector>

#include "qbern/field_q.hpp"
#include "qbern/field_qz.hpp"
#include "qbern/qcombinat.hpp"
#include "qbern/series.hpp"

namespace qbern {

/// Memoized beta_0 .. beta_n. Thread-safe: concurrent callers observe the
/// same values the unmemoized recurrence would produce.
class BetaCache {
 public:
  FieldQ get(long n);
  /// beta_0 .. beta_n.
  std::vector<FieldQ> prefix(long n);

 private:
  void extend_locked(long n);

  std::mutex mutex_;
  std::vector<FieldQ> values_;
};

/// beta_n, from a process-wide cache.
FieldQ beta_number(long n);
std::vector<FieldQ> beta_numbers(long n_max);

/// q * sum_k binom(n,k) q^k beta_k - beta_n. Equals q-1, 1, 0 for n = 0, 1, >1.
FieldQ defining_relation_residual(long n);

/// Psi(x^n) = beta_n extended linearly.
FieldQ psi(const PolyX& p);
FieldQZ psi(const PolyXZ& p);

/// Closed forms for Psi of q-binomial polynomials (one and two factors).
/// Throw std::invalid_argument unless 0 <= i <= d and 0 <= j <= e.
FieldQ lemma_beta_rhs(long i, long d);
FieldQ lemma_alpha_rhs(long i, long d, long j, long e);

/// beta_n(z) = Psi((z + (z(q-1)+1) x)^n) as a polynomial in z.
PolyZ beta_poly(long n);
/// beta_n(z) via (q-1)^-n sum_k binom(n,k) (-1)^(n-k) (k+1)/[k+1]_q (1+(q-1)z)^k.
PolyZ beta_poly_closed(long n);

/// sum_{n<N} beta_n x^n.
Series<FieldQ> ogf_truncation(std::size_t order);
/// q/(1-x) B(qx/(1-x)) - B(x), truncated; should be (q-1) + x.
Series<FieldQ> functional_residual_ogf(std::size_t order);
/// q e^x B(qx) - B(x) for the exponential generating series; should be (q-1) + x.
Series<FieldQ> functional_residual_egf(std::size_t order);
/// sum_{n<N} beta_{n+shift} / beta_shift x^n.
Series<FieldQ> shifted_ogf(std::size_t order, long shift);

/// Jackson q-integral of a polynomial from a to b, using
/// int_a^b t^m d_q t = (b^(m+1) - a^(m+1)) / [m+1]_q.
template <class K>
K jackson_qintegral(const Poly<K>& p, const K& a, const K& b) {
  K total(0);
  K a_pow = a;
  K b_pow = b;
  for (int m = 0; m <= p.degree(); ++m) {
    const K& c = p.coeffs()[static_cast<std::size_t>(m)];
    if (!qbern::is_zero(c)) total += c * (b_pow - a_pow) / K(qint(m + 1));
    a_pow *= a;
    b_pow *= b;
  }
  return total;
}

/// (1/z) int_0^z beta_n(y) dy, an ordinary integral; always a polynomial in z.
PolyZ legendre_moment(long n);
/// The same moment via (q-1)^-n sum_k binom(n,k)(-1)^(n-k) [k+1]_c / [k+1]_q,
/// c = 1 + (q-1)z.
PolyZ legendre_moment_closed(long n);
/// legendre_moment as an element of Q(q)(z).
FieldQZ legendre_moment_qz(long n);

/// Parameters of the big q-Jacobi family: a, b >= 1 and c, d >= 0.
struct GeneralParams {
  long a = 1;
  long b = 1;
  long c = 0;
  long d = 0;

  /// Throws std::invalid_argument when a bound is violated.
  void validate() const;
  friend bool operator==(const GeneralParams&, const GeneralParams&) = default;
};

/// The weight x^2 Asc(x,a-1) Asc(x,b-1) Desc(x,c-1) Desc(x,d-1), with each
/// Desc(x,-1) = -1/x cancelled against the x^2.
PolyX general_weight(const GeneralParams& p);
/// Psi(weight * f).
FieldQ general_functional(const PolyX& f, const GeneralParams& p);
/// Psi(x^n * weight): the unnormalized moments.
FieldQ general_moment_unnormalized(long n, const GeneralParams& p);
/// Normalized moment: general_moment_unnormalized(n) / C_{a,b,c,d}.
FieldQ moment_general(long n, const GeneralParams& p);
/// Closed form of C_{a,b,c,d} = Psi(weight):
/// q^(cd) [b+d-1]! [b+c-1]! [a+c-1]! [a+d-1]! / [a+b+c+d-1]!.
FieldQ normalization_constant(const GeneralParams& p);

/// Classical Bernoulli numbers B_0 .. B_n (B_1 = -1/2) from
/// sum_{k<=n} binom(n+1,k) B_k = 0. Independent of everything above.
std::vector<mpq_class> classical_bernoulli(long n_max);

}  // namespace qbern
