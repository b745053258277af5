#include "qbern/hankel.hpp"

namespace qbern {

namespace {

long binom2(long n) { return n * (n - 1) / 2; }
long binom3(long n) { return n * (n - 1) * (n - 2) / 6; }

FieldQ sign(long e) { return FieldQ(e % 2 == 0 ? 1 : -1); }
FieldQ qp(long e) { return FieldQ::q_power(e); }

}  // namespace

PolyZ bareiss_det(std::vector<std::vector<PolyZ>> m) {
  const std::size_t n = m.size();
  if (n == 0) return PolyZ(FieldQ(1));
  bool negate = false;
  PolyZ prev(FieldQ(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return PolyZ();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = PolyZ();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

FieldQZ hankel_det(const std::vector<FieldQZ>& moments, std::size_t n, std::size_t shift) {
  detail::check_hankel_length(moments.size(), n, shift);
  bool polynomial = true;
  for (std::size_t i = shift; n > 0 && i < 2 * n - 1 + shift; ++i) {
    polynomial = polynomial && moments[i].is_polynomial();
  }
  if (!polynomial) return hankel_det<FieldQZ>(moments, n, shift);
  std::vector<std::vector<PolyZ>> m(n, std::vector<PolyZ>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = moments[i + j + shift].numerator();
  }
  return FieldQZ(bareiss_det(std::move(m)));
}

FieldQ closed_form_shift(long k, long n) {
  if (n < 0) throw std::invalid_argument("closed_form_shift: n must be >= 0");
  if (k < 0 || k > 3) throw std::invalid_argument("closed_form_shift: no closed form for this shift");
  // Empty determinant.
  if (n == 0) return FieldQ(1);
  FieldQ prod(1);
  switch (k) {
    case 0:
      for (long i = 1; i < n; ++i) {
        prod *= qfact(i).pow(6) / (qfact(2 * i) * qfact(2 * i + 1));
      }
      return sign(binom2(n)) * qp(binom3(n)) * prod;
    case 1:
      for (long i = 1; i < n; ++i) {
        prod *= qfact(i).pow(3) * qfact(i + 1).pow(3) / (qfact(2 * i + 1) * qfact(2 * i + 2));
      }
      return sign(binom2(n + 1)) / qint(2) * qp(binom3(n + 1)) * prod;
    case 2:
      for (long i = 1; i < n; ++i) {
        prod *= qfact(i) * qfact(i + 1).pow(4) * qfact(i + 2) /
                (qfact(2 * i + 2) * qfact(2 * i + 3));
      }
      return sign(binom2(n)) / (qint(2) * qint(3)) * qp(binom3(n + 2)) * prod;
    case 3:
      for (long i = 1; i < n; ++i) {
        prod *= qfact(i + 1).pow(3) * qfact(i + 2).pow(3) / (qfact(2 * i + 3) * qfact(2 * i + 4));
      }
      return sign(binom2(n + 1)) / (qint(3).pow(2) * qint(4)) * qp(binom3(n + 2)) *
             (qp(binom2(n + 2)) + sign(n)) * prod;
    default:
      throw std::invalid_argument("closed_form_shift: no closed form for this shift");
  }
}

FieldQZ closed_form_z(long n) {
  if (n < 0) throw std::invalid_argument("closed_form_z: n must be >= 0");
  PolyZ poly_part(FieldQ(1));
  FieldQ scalar = sign(binom2(n)) * qp(binom3(n));
  for (long i = 1; i < n; ++i) {
    scalar *= qfact(i).pow(4) / (qfact(2 * i) * qfact(2 * i + 1));
    poly_part *= asc(i) * desc(i);
  }
  return FieldQZ(poly_part * scalar);
}

FieldQ general_det_closed_form(const GeneralParams& p, long n) {
  p.validate();
  if (n < 0) throw std::invalid_argument("general_det_closed_form: n must be >= 0");
  const auto [a, b, c, d] = p;
  const long s = a + b + c + d;
  FieldQ prod(1);
  for (long i = 1; i < n; ++i) {
    const FieldQ factor = qint(i) * qint(a + c + i - 1) * qint(b + c + i - 1) *
                          qint(a + d + i - 1) * qint(b + d + i - 1) * qint(s + i - 2) /
                          (qint(s + 2 * i - 3) * qint(s + 2 * i - 2).pow(2) * qint(s + 2 * i - 1));
    prod *= factor.pow(n - i);
  }
  return (-qp(c + d)).pow(binom2(n)) * qp(binom3(n)) * normalization_constant(p).pow(n) * prod;
}

FieldQ general_moment_matrix_det(const GeneralParams& p, long n) {
  std::vector<FieldQ> m;
  for (long i = 0; i < 2 * n - 1; ++i) m.push_back(general_moment_unnormalized(i, p));
  return hankel_det(m, static_cast<std::size_t>(n));
}

FieldQ hahn_pn_at_zero_closed(long k, long n) {
  switch (k) {
    case 0:
      return qp(binom2(n)) * qfact(n).pow(3) / qfact(2 * n);
    case 1:
      return qp(binom2(n + 1)) * qfact(n).pow(2) * qfact(n + 1) / qfact(2 * n + 1);
    case 2:
      return qfact(n) * qfact(n + 1).pow(2) / qfact(2 * n + 2) * (sign(n) + qp(binom2(n + 2)));
    default:
      throw std::invalid_argument("hahn_pn_at_zero_closed: k must be 0, 1 or 2");
  }
}

}  // namespace qbern
