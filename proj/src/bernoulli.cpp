#include "qbern/bernoulli.hpp"

#include <stdexcept>

namespace qbern {

namespace {

BetaCache& global_cache() {
  static BetaCache cache;
  return cache;
}

long binom2(long n) { return n * (n - 1) / 2; }

FieldQ sign(long e) { return FieldQ(e % 2 == 0 ? 1 : -1); }

// 1 + (q-1) z
PolyZ affine_c() { return PolyZ({FieldQ(1), FieldQ::q() - FieldQ(1)}); }

}  // namespace

void BetaCache::extend_locked(long n) {
  const FieldQ q = FieldQ::q();
  while (static_cast<long>(values_.size()) <= n) {
    const long m = static_cast<long>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      continue;
    }
    // beta_m (q^(m+1) - 1) = [m == 1] - sum_{k<m} binom(m,k) q^(k+1) beta_k
    FieldQ rhs(m == 1 ? 1 : 0);
    for (long k = 0; k < m; ++k) {
      rhs -= FieldQ(binomial(m, k)) * FieldQ::q_power(k + 1) * values_[static_cast<std::size_t>(k)];
    }
    values_.push_back(rhs / (FieldQ::q_power(m + 1) - FieldQ(1)));
  }
}

FieldQ BetaCache::get(long n) {
  if (n < 0) throw std::invalid_argument("beta_number: negative index");
  std::lock_guard<std::mutex> lock(mutex_);
  extend_locked(n);
  return values_[static_cast<std::size_t>(n)];
}

std::vector<FieldQ> BetaCache::prefix(long n) {
  if (n < 0) return {};
  std::lock_guard<std::mutex> lock(mutex_);
  extend_locked(n);
  return {values_.begin(), values_.begin() + n + 1};
}

FieldQ beta_number(long n) { return global_cache().get(n); }

std::vector<FieldQ> beta_numbers(long n_max) { return global_cache().prefix(n_max); }

FieldQ defining_relation_residual(long n) {
  const auto beta = beta_numbers(n);
  FieldQ sum(0);
  for (long k = 0; k <= n; ++k) {
    sum += FieldQ(binomial(n, k)) * FieldQ::q_power(k) * beta[static_cast<std::size_t>(k)];
  }
  return FieldQ::q() * sum - beta[static_cast<std::size_t>(n)];
}

FieldQ psi(const PolyX& p) {
  if (p.is_zero()) return FieldQ(0);
  const auto beta = beta_numbers(p.degree());
  FieldQ r(0);
  for (int n = 0; n <= p.degree(); ++n) {
    const FieldQ& c = p.coeffs()[static_cast<std::size_t>(n)];
    if (!c.is_zero()) r += c * beta[static_cast<std::size_t>(n)];
  }
  return r;
}

FieldQZ psi(const PolyXZ& p) {
  if (p.is_zero()) return FieldQZ(0);
  const auto beta = beta_numbers(p.degree());
  FieldQZ r(0);
  for (int n = 0; n <= p.degree(); ++n) {
    const FieldQZ& c = p.coeffs()[static_cast<std::size_t>(n)];
    if (!c.is_zero()) r += c * FieldQZ(beta[static_cast<std::size_t>(n)]);
  }
  return r;
}

FieldQ lemma_beta_rhs(long i, long d) {
  if (i < 0 || i > d) throw std::invalid_argument("lemma_beta_rhs: need 0 <= i <= d");
  const long s = d - i;
  return sign(s) * FieldQ::q_power(-binom2(s)) / (qint(d + 1) * qbinom(d, i));
}

FieldQ lemma_alpha_rhs(long i, long d, long j, long e) {
  if (i < 0 || i > d || j < 0 || j > e) {
    throw std::invalid_argument("lemma_alpha_rhs: need 0 <= i <= d and 0 <= j <= e");
  }
  const long s = d - i;
  const long t = e - j;
  return sign(s + t) * FieldQ::q_power(-binom2(s) + s * t - binom2(t)) /
         (qint(d + e + 1) * qbinom(d + e, d - i + j));
}

PolyZ beta_poly(long n) {
  const auto beta = beta_numbers(n);
  const PolyZ z = PolyZ::variable();
  const PolyZ c = affine_c();
  PolyZ r;
  PolyZ c_pow(FieldQ(1));
  for (long k = 0; k <= n; ++k) {
    r += z.pow(static_cast<unsigned>(n - k)) * c_pow *
         (FieldQ(binomial(n, k)) * beta[static_cast<std::size_t>(k)]);
    c_pow *= c;
  }
  return r;
}

PolyZ beta_poly_closed(long n) {
  const PolyZ c = affine_c();
  PolyZ r;
  PolyZ c_pow(FieldQ(1));
  for (long k = 0; k <= n; ++k) {
    const FieldQ w = FieldQ(binomial(n, k)) * sign(n - k) * FieldQ(k + 1) / qint(k + 1);
    r += c_pow * w;
    c_pow *= c;
  }
  return r / (FieldQ::q() - FieldQ(1)).pow(n);
}

Series<FieldQ> ogf_truncation(std::size_t order) {
  if (order == 0) return Series<FieldQ>(0);
  return Series<FieldQ>(order, beta_numbers(static_cast<long>(order) - 1));
}

Series<FieldQ> functional_residual_ogf(std::size_t order) {
  using S = Series<FieldQ>;
  const FieldQ q = FieldQ::q();
  const S b = ogf_truncation(order);
  const S one_minus_x_inv = (S::constant(FieldQ(1), order) - S::variable(order)).reciprocal();
  const S inner = S::variable(order) * one_minus_x_inv * q;
  return one_minus_x_inv * b.substitute(inner) * q - b;
}

Series<FieldQ> functional_residual_egf(std::size_t order) {
  using S = Series<FieldQ>;
  const auto beta = order ? beta_numbers(static_cast<long>(order) - 1) : std::vector<FieldQ>{};
  S b(order), b_scaled(order), exp_x(order);
  mpq_class inv_fact = 1;
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) inv_fact /= static_cast<long>(n);
    b[n] = beta[n] * FieldQ(inv_fact);
    b_scaled[n] = b[n] * FieldQ::q_power(static_cast<long>(n));
    exp_x[n] = FieldQ(inv_fact);
  }
  return exp_x * b_scaled * FieldQ::q() - b;
}

Series<FieldQ> shifted_ogf(std::size_t order, long shift) {
  const auto beta = beta_numbers(static_cast<long>(order) + shift);
  Series<FieldQ> s(order);
  const FieldQ& base = beta[static_cast<std::size_t>(shift)];
  for (std::size_t n = 0; n < order; ++n) s[n] = beta[n + static_cast<std::size_t>(shift)] / base;
  return s;
}

PolyZ legendre_moment(long n) {
  const PolyZ bp = beta_poly(n);
  std::vector<FieldQ> c(bp.size());
  for (std::size_t k = 0; k < bp.size(); ++k) {
    c[k] = bp.coeffs()[k] / FieldQ(static_cast<long>(k) + 1);
  }
  return PolyZ(std::move(c));
}

PolyZ legendre_moment_closed(long n) {
  const PolyZ c = affine_c();
  PolyZ r;
  PolyZ bracket;  // [k+1]_c = sum_{j<=k} c^j
  PolyZ c_pow(FieldQ(1));
  for (long k = 0; k <= n; ++k) {
    bracket += c_pow;
    c_pow *= c;
    r += bracket * (FieldQ(binomial(n, k)) * sign(n - k) / qint(k + 1));
  }
  return r / (FieldQ::q() - FieldQ(1)).pow(n);
}

FieldQZ legendre_moment_qz(long n) { return FieldQZ(legendre_moment(n)); }

void GeneralParams::validate() const {
  if (a < 1 || b < 1) throw std::invalid_argument("GeneralParams: a and b must be >= 1");
  if (c < 0 || d < 0) throw std::invalid_argument("GeneralParams: c and d must be >= 0");
}

PolyX general_weight(const GeneralParams& p) {
  p.validate();
  // Each Desc(x, -1) = -1/x consumes one power of the leading x^2.
  long x_power = 2;
  FieldQ coef(1);
  PolyX w = asc(p.a - 1) * asc(p.b - 1);
  for (long e : {p.c, p.d}) {
    if (e == 0) {
      --x_power;
      coef = -coef;
    } else {
      w *= desc(e - 1);
    }
  }
  return PolyX::monomial(coef, static_cast<int>(x_power)) * w;
}

FieldQ general_functional(const PolyX& f, const GeneralParams& p) {
  return psi(general_weight(p) * f);
}

FieldQ general_moment_unnormalized(long n, const GeneralParams& p) {
  return psi(PolyX::monomial(FieldQ(1), static_cast<int>(n)) * general_weight(p));
}

FieldQ moment_general(long n, const GeneralParams& p) {
  return general_moment_unnormalized(n, p) / normalization_constant(p);
}

FieldQ normalization_constant(const GeneralParams& p) {
  p.validate();
  const auto [a, b, c, d] = p;
  return FieldQ::q_power(c * d) * qfact(b + d - 1) * qfact(b + c - 1) * qfact(a + c - 1) *
         qfact(a + d - 1) / qfact(a + b + c + d - 1);
}

std::vector<mpq_class> classical_bernoulli(long n_max) {
  std::vector<mpq_class> b;
  for (long n = 0; n <= n_max; ++n) {
    if (n == 0) {
      b.emplace_back(1);
      continue;
    }
    mpq_class acc = 0;
    for (long k = 0; k < n; ++k) acc += binomial(n + 1, k) * b[static_cast<std::size_t>(k)];
    b.push_back(-acc / (n + 1));
  }
  return b;
}

}  // namespace qbern
