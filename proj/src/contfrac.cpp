#include "qbern/contfrac.hpp"

#include <stdexcept>

#include "qbern/bernoulli.hpp"
#include "qbern/qcombinat.hpp"

namespace qbern {

namespace {

FieldQ qp(long e) { return FieldQ::q_power(e); }
FieldQ sign(long e) { return FieldQ(e % 2 == 0 ? 1 : -1); }
long binom2(long n) { return n * (n - 1) / 2; }

// q^binom(m,2) + (-1)^m, the factor shared by the B2 coefficients.
FieldQ b2_factor(long m) { return qp(binom2(m)) + sign(m); }

FieldQ c_hat(long k) {
  if (k % 2 == 1) {
    const long n = (k + 1) / 2;
    return qp(n - 1) * qint(n).pow(2) / ((qp(n) + FieldQ(1)) * qint(2 * n - 1));
  }
  const long n = k / 2;
  return -qint(n).pow(2) / ((qp(n) + FieldQ(1)) * qint(2 * n + 1));
}

FieldQ c_hat1(long k) {
  if (k % 2 == 1) {
    const long n = (k + 1) / 2;
    return qp(n) * qint(n).pow(2) * qint(n + 1) / (qint(2 * n) * qint(2 * n + 1));
  }
  const long n = k / 2;
  return -qint(n) * qint(n + 1).pow(2) / (qint(2 * n + 1) * qint(2 * n + 2));
}

FieldQ c_hat2(long k) {
  if (k % 2 == 1) {
    const long n = (k + 1) / 2;
    return qint(n) * qint(n + 1).pow(2) / (qint(2 * n + 1) * qint(2 * n + 2)) * b2_factor(n + 2) /
           b2_factor(n + 1);
  }
  const long n = k / 2;
  return -qp(n + 1) * qint(n + 1).pow(2) * qint(n + 2) / (qint(2 * n + 2) * qint(2 * n + 3)) *
         b2_factor(n + 1) / b2_factor(n + 2);
}

FieldQZ c_hat_z(long k) {
  const FieldQZ z = FieldQZ::z();
  if (k % 2 == 1) {
    const long n = (k + 1) / 2;
    return FieldQZ(qp(n - 1) * qint(n) / ((qp(n) + FieldQ(1)) * qint(2 * n - 1))) *
           (FieldQZ(qint(n)) - z);
  }
  const long n = k / 2;
  return -FieldQZ(qint(n) / ((qp(n) + FieldQ(1)) * qint(2 * n + 1))) *
         (FieldQZ(qint(n)) + FieldQZ(qp(n)) * z);
}

}  // namespace

SeriesId parse_series_id(const std::string& name) {
  if (name == "B") return SeriesId::B;
  if (name == "B1") return SeriesId::B1;
  if (name == "B2") return SeriesId::B2;
  if (name == "Bz") return SeriesId::Bz;
  throw std::invalid_argument("unknown series '" + name + "' (expected B, B1, B2 or Bz)");
}

std::string series_name(SeriesId id) {
  switch (id) {
    case SeriesId::B: return "B";
    case SeriesId::B1: return "B1";
    case SeriesId::B2: return "B2";
    case SeriesId::Bz: return "Bz";
  }
  return "?";
}

SFraction<FieldQ> closed_sfraction(SeriesId id) {
  switch (id) {
    case SeriesId::B: return {c_hat};
    case SeriesId::B1: return {c_hat1};
    case SeriesId::B2: return {c_hat2};
    case SeriesId::Bz: break;
  }
  throw std::invalid_argument("closed_sfraction: Bz lives over Q(q)(z)");
}

SFraction<FieldQZ> closed_sfraction_z() { return {c_hat_z}; }

Recurrence<FieldQ> target_recurrence(SeriesId id) {
  switch (id) {
    case SeriesId::B: return hahn_recurrence_00();
    case SeriesId::B1: return hahn_recurrence_01();
    case SeriesId::B2: return hahn_recurrence_11();
    case SeriesId::Bz: break;
  }
  throw std::invalid_argument("target_recurrence: Bz lives over Q(q)(z)");
}

Series<FieldQ> target_series(SeriesId id, std::size_t order) {
  switch (id) {
    case SeriesId::B: return ogf_truncation(order);
    case SeriesId::B1: return shifted_ogf(order, 1);
    case SeriesId::B2: return shifted_ogf(order, 2);
    case SeriesId::Bz: break;
  }
  throw std::invalid_argument("target_series: Bz lives over Q(q)(z)");
}

Series<FieldQZ> target_series_z(std::size_t order) {
  Series<FieldQZ> s(order);
  for (std::size_t n = 0; n < order; ++n) s[n] = legendre_moment_qz(static_cast<long>(n));
  return s;
}

}  // namespace qbern
