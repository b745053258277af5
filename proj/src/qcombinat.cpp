#include "qbern/qcombinat.hpp"

#include <stdexcept>

namespace qbern {

FieldQ qint(long n) {
  if (n == 0) return FieldQ(0);
  const long m = n > 0 ? n : -n;
  std::vector<RatQ> ones(static_cast<std::size_t>(m), RatQ(1));
  FieldQ positive = FieldQ::from_polys(PolyQ(std::move(ones)), PolyQ(RatQ(1)));
  if (n > 0) return positive;
  // [-m]_q = -q^-m [m]_q
  return -(positive * FieldQ::q_power(-m));
}

FieldQ qfact(long n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  FieldQ r(1);
  for (long i = 2; i <= n; ++i) r *= qint(i);
  return r;
}

FieldQ qbinom(long n, long m) {
  if (m < 0 || m > n) throw std::invalid_argument("qbinom: need 0 <= m <= n");
  // Product form keeps intermediate degrees small.
  FieldQ r(1);
  for (long i = 1; i <= m; ++i) r = r * qint(n - m + i) / qint(i);
  return r;
}

FieldQ qpoch(QPochSpec spec) {
  FieldQ r(1);
  for (long i = 0; i < spec.length; ++i) {
    r *= FieldQ(1) - FieldQ::q_power(spec.base_exponent + i);
  }
  return r;
}

PolyX qpoch_linear(long k, long a_shift) {
  // 1 - q^(a+i)(1 + (q-1)x) = (1 - q^(a+i)) - q^(a+i)(q-1) x
  const FieldQ qm1 = FieldQ::q() - FieldQ(1);
  PolyX r(FieldQ(1));
  for (long i = 0; i < k; ++i) {
    const FieldQ qp = FieldQ::q_power(a_shift + i);
    r *= PolyX({FieldQ(1) - qp, -(qp * qm1)});
  }
  return r;
}

PolyX qbase(long i, long d) {
  PolyX r(FieldQ(1));
  for (long t = i - d + 1; t <= i; ++t) {
    r *= PolyX({qint(t), FieldQ::q_power(t)});
  }
  return r / qfact(d);
}

PolyX asc(long a) {
  PolyX r(FieldQ(1));
  for (long i = 1; i <= a; ++i) r *= PolyX({qint(i), FieldQ::q_power(i)});
  return r;
}

PolyX desc(long a) {
  PolyX r(FieldQ(1));
  for (long i = 1; i <= a; ++i) r *= PolyX({qint(i), FieldQ(-1)});
  return r;
}

FieldQ phi21_terminating(long n, long top_exp, long bottom_exp) {
  FieldQ sum(0);
  FieldQ term(1);  // k-th summand, updated by its ratio
  const FieldQ q = FieldQ::q();
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      const long j = k - 1;
      const FieldQ num = (FieldQ(1) - FieldQ::q_power(j - n)) *
                         (FieldQ(1) - FieldQ::q_power(top_exp + j)) * q;
      const FieldQ den = (FieldQ(1) - FieldQ::q_power(1 + j)) *
                         (FieldQ(1) - FieldQ::q_power(bottom_exp + j));
      term = term * num / den;
    }
    sum += term;
  }
  return sum;
}

mpq_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(r);
}

}  // namespace qbern
