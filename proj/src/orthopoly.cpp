#include "qbern/orthopoly.hpp"

namespace qbern {

namespace {

FieldQ qp(long e) { return FieldQ::q_power(e); }

// 1 - q^e
FieldQ om(long e) { return FieldQ(1) - qp(e); }

FieldQ q_minus_one() { return FieldQ::q() - FieldQ(1); }

// 1 + (q-1) z as an element of Q(q)(z).
FieldQZ legendre_c() { return FieldQZ(1) + FieldQZ(q_minus_one()) * FieldQZ::z(); }

FieldQ hahn_A(long c, long d, long n) {
  return om(n + d + 1) * om(n + c + 1) * om(n + c + d + 1) /
         (om(2 * n + c + d + 1) * om(2 * n + c + d + 2));
}

FieldQ hahn_C(long c, long d, long n) {
  if (n == 0) return FieldQ(0);
  return -(qp(n + c + d + 1) * om(n) * om(n + c) * om(n + d)) /
         (om(2 * n + c + d) * om(2 * n + c + d + 1));
}

FieldQ jacobi_A(const GeneralParams& p, long n) {
  const long s = p.a + p.b + p.c + p.d;
  return om(n + p.a + p.d) * om(n + p.a + p.c) * om(n + s - 1) /
         (om(2 * n + s - 1) * om(2 * n + s));
}

FieldQ jacobi_C(const GeneralParams& p, long n) {
  if (n == 0) return FieldQ(0);
  const long s = p.a + p.b + p.c + p.d;
  return -(qp(n + 2 * p.a + p.c + p.d - 1) * om(n) * om(n + p.b + p.d - 1) *
           om(n + p.b + p.c - 1)) /
         (om(2 * n + s - 2) * om(2 * n + s - 1));
}

// (q^-n; q)_k (q^(n+theta); q)_k q^k / ((q; q)_k (q^e1; q)_k (q^e2; q)_k)
FieldQ hyper_weight(long n, long theta, long e1, long e2, long k) {
  return qpoch(-n, k) * qpoch(n + theta, k) * qp(k) / (qpoch(1, k) * qpoch(e1, k) * qpoch(e2, k));
}

}  // namespace

Recurrence<FieldQ> raw_hahn_recurrence(long c, long d) {
  if (c < 0 || d < 0) throw std::invalid_argument("hahn: c and d must be >= 0");
  return {[c, d](long n) { return hahn_A(c, d, n) + hahn_C(c, d, n) - FieldQ(1); },
          [c, d](long n) { return hahn_A(c, d, n - 1) * hahn_C(c, d, n); }};
}

Recurrence<FieldQ> hahn_recurrence(long c, long d) {
  const FieldQ q = FieldQ::q();
  return affine_transform(raw_hahn_recurrence(c, d), q * q_minus_one(), q);
}

Recurrence<FieldQ> hahn_recurrence_00() {
  return {[](long n) {
            return (qint(2 * n + 1) + qint(n + 1) - FieldQ(3) * qint(n)) /
                   ((FieldQ(1) + qp(n)) * (FieldQ(1) + qp(n + 1)));
          },
          [](long n) {
            return -(qp(n - 1) * qint(n).pow(6)) /
                   (qint(2 * n - 1) * qint(2 * n).pow(2) * qint(2 * n + 1));
          }};
}

Recurrence<FieldQ> hahn_recurrence_01() {
  // a_n from A_n and C_n.
  const Recurrence<FieldQ> general = hahn_recurrence(0, 1);
  return {general.a, [](long n) {
            return -(qp(n) * qint(n).pow(3) * qint(n + 1).pow(3)) /
                   (qint(2 * n) * qint(2 * n + 1).pow(2) * qint(2 * n + 2));
          }};
}

Recurrence<FieldQ> hahn_recurrence_11() {
  return {[](long n) {
            return q_minus_one() * qint(n + 1) * qint(n + 2) /
                   ((FieldQ(1) + qp(n + 1)) * (FieldQ(1) + qp(n + 2)));
          },
          [](long n) {
            return -(qp(n + 1) * qint(n) * qint(n + 1).pow(4) * qint(n + 2)) /
                   (qint(2 * n + 1) * qint(2 * n + 2).pow(2) * qint(2 * n + 3));
          }};
}

Recurrence<FieldQZ> legendre_recurrence() {
  return {[](long n) {
            const FieldQZ z = FieldQZ::z();
            const FieldQZ num = FieldQZ(qint(2 * n + 1) + qint(n + 1) - FieldQ(3) * qint(n)) -
                                FieldQZ(FieldQ(2) * qp(n)) * z;
            return num / FieldQZ((FieldQ(1) + qp(n)) * (FieldQ(1) + qp(n + 1)));
          },
          [](long n) {
            const FieldQZ z = FieldQZ::z();
            const FieldQ scalar = -(qp(n - 1) * qint(n).pow(4)) /
                                  (qint(2 * n - 1) * qint(2 * n).pow(2) * qint(2 * n + 1));
            return FieldQZ(scalar) * (FieldQZ(qint(n)) - z) * (FieldQZ(qint(n)) + FieldQZ(qp(n)) * z);
          }};
}

Recurrence<FieldQZ> legendre_recurrence_from_raw() {
  auto A = [](long n) {
    return FieldQZ(om(n + 1).pow(2)) * (FieldQZ(1) - legendre_c() * FieldQZ(qp(n + 1))) /
           FieldQZ(om(2 * n + 1) * om(2 * n + 2));
  };
  auto C = [](long n) {
    if (n == 0) return FieldQZ(0);
    return -FieldQZ(qp(n + 1) * om(n).pow(2) / (om(2 * n) * om(2 * n + 1))) *
           (legendre_c() - FieldQZ(qp(n)));
  };
  const Recurrence<FieldQZ> raw{[A, C](long n) { return A(n) + C(n) - FieldQZ(1); },
                                [A, C](long n) { return A(n - 1) * C(n); }};
  const FieldQ q = FieldQ::q();
  return affine_transform(raw, FieldQZ(q * q_minus_one()), FieldQZ(q));
}

Recurrence<FieldQ> raw_jacobi_recurrence(const GeneralParams& p) {
  p.validate();
  return {[p](long n) { return jacobi_A(p, n) + jacobi_C(p, n) - FieldQ(1); },
          [p](long n) { return jacobi_A(p, n - 1) * jacobi_C(p, n); }};
}

Recurrence<FieldQ> jacobi_recurrence(const GeneralParams& p) {
  const FieldQ qa = qp(p.a);
  return affine_transform(raw_jacobi_recurrence(p), qa * q_minus_one(), qa);
}

FieldQ jacobi_b_closed(const GeneralParams& p, long n) {
  p.validate();
  const auto [a, b, c, d] = p;
  const long s = a + b + c + d;
  return -(qp(n + c + d - 1) * qint(n) * qint(a + c + n - 1) * qint(b + c + n - 1) *
           qint(a + d + n - 1) * qint(b + d + n - 1) * qint(s + n - 2)) /
         (qint(s + 2 * n - 3) * qint(s + 2 * n - 2).pow(2) * qint(s + 2 * n - 1));
}

PolyX hypergeometric_pn(const HahnFamily& f, long n) {
  return hypergeometric_pn(JacobiFamily{{1, 1, f.c, f.d}}, n);
}

PolyX hypergeometric_pn(const JacobiFamily& f, long n) {
  const auto& p = f.params;
  p.validate();
  const long theta = p.a + p.b + p.c + p.d - 1;
  PolyX sum;
  for (long k = 0; k <= n; ++k) {
    sum += qpoch_linear(k, p.a) * hyper_weight(n, theta, p.a + p.c, p.a + p.d, k);
  }
  return sum;
}

PolyXZ hypergeometric_pn(const LegendreFamily&, long n) {
  const FieldQZ c = legendre_c();
  PolyXZ sum;
  FieldQZ lower(1);  // (q c; q)_k
  for (long k = 0; k <= n; ++k) {
    if (k > 0) lower *= FieldQZ(1) - FieldQZ(qp(k)) * c;
    const FieldQ top = qpoch(-n, k) * qpoch(n + 1, k) * qp(k) / qpoch(1, k).pow(2);
    const FieldQZ w = FieldQZ(top) / lower;
    sum += embed_z(qpoch_linear(k, 1)) * w;
  }
  return sum;
}

FieldQ hahn_leading_coefficient(long c, long d, long n) {
  return qp(n) * q_minus_one().pow(n) * qpoch(n + c + d + 1, n) / (qpoch(c + 1, n) * qpoch(d + 1, n));
}

FieldQ family_functional(const HahnFamily& f, const PolyX& poly) {
  return general_functional(poly, GeneralParams{1, 1, f.c, f.d});
}

FieldQZ family_functional(const LegendreFamily&, const PolyXZ& poly) {
  FieldQZ r(0);
  for (int n = 0; n <= poly.degree(); ++n) {
    const FieldQZ& coef = poly.coeffs()[static_cast<std::size_t>(n)];
    if (!coef.is_zero()) r += coef * legendre_moment_qz(n);
  }
  return r;
}

FieldQ family_functional(const JacobiFamily& f, const PolyX& poly) {
  return general_functional(poly, f.params);
}

std::vector<FieldQZ> legendre_jackson_moments(std::size_t count) {
  const FieldQZ q(FieldQ::q());
  const FieldQZ lower = legendre_c() * q;
  const FieldQZ total = jackson_qintegral(PolyXZ(FieldQZ(1)), lower, q);
  std::vector<FieldQZ> nu;
  for (std::size_t n = 0; n < count; ++n) {
    const PolyXZ mono = PolyXZ::monomial(FieldQZ(1), static_cast<int>(n));
    nu.push_back(jackson_qintegral(mono, lower, q) / total);
  }
  return nu;
}

}  // namespace qbern
