#include <doctest.h>

#include "qbern/hankel.hpp"

using namespace qbern;

namespace {

const FieldQ q = FieldQ::q();
const FieldQ one(1);

// Determinant over the rationals by cofactor expansion, independent of the
// elimination code.
mpq_class cofactor_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpq_class det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const mpq_class term = m[0][j] * cofactor_det(minor);
    det += j % 2 == 0 ? term : mpq_class(-term);
  }
  return det;
}

}  // namespace

TEST_CASE("small determinants") {
  const auto beta = beta_numbers(12);
  CHECK(hankel_det(beta, 0) == one);
  CHECK(hankel_det(beta, 2) == beta[0] * beta[2] - beta[1] * beta[1]);
  CHECK(hankel_det(beta, 2) == FieldQ(-1) / ((q + one).pow(2) * (q * q + q + one)));
  CHECK(hankel_det(beta, 1, 3) == beta[3]);
  CHECK_THROWS_AS(hankel_det(beta, 7, 2), std::invalid_argument);
  // A zero leading entry needs a row swap.
  const std::vector<FieldQ> m{FieldQ(0), one, FieldQ(0)};
  CHECK(hankel_det(m, 2) == FieldQ(-1));
}

TEST_CASE("determinants agree with cofactor expansion at rational q") {
  const auto beta = beta_numbers(12);
  for (const mpq_class v : {mpq_class(2), mpq_class(-1, 3)}) {
    for (std::size_t shift = 0; shift <= 4; ++shift) {
      for (std::size_t n = 0; n <= 4; ++n) {
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) m[i][j] = beta[i + j + shift].eval(v);
        }
        CHECK(hankel_det(beta, n, shift).eval(v) == cofactor_det(m));
      }
    }
  }
}

TEST_CASE("closed forms for shifted determinants") {
  CHECK(closed_form_shift(0, 2) == FieldQ(-1) / (qint(2).pow(2) * qint(3)));
  CHECK(closed_form_shift(3, 1) == -(q * (q - one)) / (qint(3) * qint(4)));
  for (long k = 0; k <= 3; ++k) CHECK(closed_form_shift(k, 0) == one);
  CHECK_THROWS_AS(closed_form_shift(4, 2), std::invalid_argument);
  const auto beta = beta_numbers(12);
  for (long k = 0; k <= 3; ++k) {
    for (long n = 0; n <= 5; ++n) CHECK(hankel_det(beta, n, k) == closed_form_shift(k, n));
  }
  const auto classical = classical_bernoulli(10);
  CHECK(closed_form_shift(0, 2).eval(1) == mpq_class(-1, 12));
  for (long n = 0; n <= 5; ++n) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) m[i][j] = classical[i + j];
    }
    CHECK(closed_form_shift(0, n).eval(1) == cofactor_det(m));
  }
}

TEST_CASE("z-dependent determinant") {
  const FieldQZ z = FieldQZ::z();
  CHECK(closed_form_z(0) == FieldQZ(1));
  CHECK(closed_form_z(1) == FieldQZ(1));
  CHECK(closed_form_z(2) == -(FieldQZ(1) - z) * (FieldQZ(1) + FieldQZ(q) * z) / FieldQZ(qint(2).pow(2) * qint(3)));
  std::vector<FieldQZ> lm;
  for (long n = 0; n < 8; ++n) lm.push_back(legendre_moment_qz(n));
  for (long n = 0; n <= 4; ++n) {
    CHECK(hankel_det(lm, n) == closed_form_z(n));
    CHECK(hankel_det<FieldQZ>(lm, n) == closed_form_z(n));
  }
  for (long n = 0; n <= 6; ++n) CHECK(closed_form_z(n).eval_z(FieldQ(0)) == closed_form_shift(0, n));
}

TEST_CASE("product formula and the q_n sequence") {
  const auto rec = hahn_recurrence_00();
  CHECK(product_formula(rec, 0) == one);
  CHECK(product_formula(rec, 1) == one);
  CHECK(product_formula(rec, 2) == FieldQ(-1) / (qint(2).pow(2) * qint(3)));
  CHECK(product_formula(rec, 3) == rec.b(1).pow(2) * rec.b(2));
  const auto qn = qn_sequence(rec, 9);
  CHECK(qn[1] == beta_number(1));
  const auto polys = generate_polys(rec, 9);
  for (long n = 0; n <= 8; ++n) {
    CHECK(qn[n] == FieldQ(n % 2 == 0 ? 1 : -1) * polys[n].coeff(0));
    CHECK(polys[n].coeff(0) == hahn_pn_at_zero_closed(0, n));
  }
  const auto beta = beta_numbers(14);
  for (long n = 0; n <= 6; ++n) CHECK(shifted_det_formula(rec, n) == hankel_det(beta, n, 1));
}

TEST_CASE("general determinant") {
  for (long n = 0; n <= 4; ++n) {
    CHECK(general_det_closed_form({1, 1, 0, 0}, n) == closed_form_shift(0, n));
    CHECK(general_moment_matrix_det({1, 1, 1, 1}, n) == closed_form_shift(2, n));
    CHECK(general_moment_matrix_det({2, 1, 0, 1}, n) == general_det_closed_form({2, 1, 0, 1}, n));
  }
  CHECK(general_det_closed_form({2, 2, 1, 0}, 1) == normalization_constant({2, 2, 1, 0}));
}

TEST_CASE("fraction-free elimination") {
  const PolyZ z = PolyZ::variable();
  std::vector<std::vector<PolyZ>> m{{PolyZ(), z}, {z, PolyZ(one)}};
  CHECK(bareiss_det(m) == -(z * z));
  CHECK(bareiss_det({}) == PolyZ(one));
}
