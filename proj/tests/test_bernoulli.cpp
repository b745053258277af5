#include <doctest.h>

#include <thread>

#include "qbern/bernoulli.hpp"

using namespace qbern;

namespace {

const FieldQ q = FieldQ::q();
const FieldQ one(1);
const PolyX x = PolyX::variable();

// beta_n at a rational q straight from the recurrence, without Q(q).
std::vector<mpq_class> betas_at(const mpq_class& v, long n_max) {
  std::vector<mpq_class> b;
  for (long m = 0; m <= n_max; ++m) {
    if (m == 0) {
      b.emplace_back(1);
      continue;
    }
    mpq_class rhs = m == 1 ? 1 : 0;
    mpq_class vp = v;
    for (long k = 0; k < m; ++k) {
      rhs -= binomial(m, k) * vp * b[k];
      vp *= v;
    }
    mpq_class vm = 1;
    for (long k = 0; k <= m; ++k) vm *= v;
    b.push_back(rhs / (vm - 1));
  }
  return b;
}

}  // namespace

TEST_CASE("first q-Bernoulli numbers") {
  CHECK(beta_number(0) == one);
  CHECK(beta_number(1) == FieldQ(-1) / (q + one));
  CHECK(beta_number(2) == q / ((q + one) * (q * q + q + one)));
  CHECK(beta_number(3) == -(q * (q - one)) / ((q + one) * (q * q + q + one) * (q * q + one)));
  CHECK_THROWS_AS(beta_number(-1), std::invalid_argument);
}

TEST_CASE("specializations agree with an independent rational recurrence") {
  for (const mpq_class v : {mpq_class(2), mpq_class(1, 3), mpq_class(-2), mpq_class(5, 7)}) {
    const auto expected = betas_at(v, 14);
    for (long n = 0; n <= 14; ++n) CHECK(beta_number(n).eval(v) == expected[n]);
  }
}

TEST_CASE("q = 1 recovers the Bernoulli numbers") {
  const auto b = classical_bernoulli(12);
  CHECK(b[1] == mpq_class(-1, 2));
  CHECK(b[2] == mpq_class(1, 6));
  CHECK(b[12] == mpq_class(-691, 2730));
  for (long n = 0; n <= 12; ++n) CHECK(beta_number(n).eval(1) == b[n]);
}

TEST_CASE("defining relation") {
  CHECK(defining_relation_residual(0) == q - one);
  CHECK(defining_relation_residual(1) == one);
  for (long n = 2; n <= 12; ++n) CHECK(defining_relation_residual(n).is_zero());
}

TEST_CASE("concurrent cache use returns the same values") {
  std::vector<FieldQ> a, b;
  std::thread t1([&] { a = beta_numbers(18); });
  std::thread t2([&] { b = beta_numbers(18); });
  t1.join();
  t2.join();
  CHECK(a == b);
  CHECK(a[18] == beta_number(18));
}

TEST_CASE("the moment functional") {
  CHECK(psi(PolyX(one)) == one);
  CHECK(psi(x * x) == beta_number(2));
  CHECK(psi(PolyX()) == FieldQ(0));
  CHECK(psi(qbase(1, 2)) == FieldQ(-1) / (qint(3) * qint(2)));
  for (long k = 0; k <= 5; ++k) {
    CHECK(lemma_beta_rhs(k, k) == one / qint(k + 1));
    CHECK(lemma_beta_rhs(k, k + 1) == FieldQ(-1) / (qint(k + 1) * qint(k + 2)));
    CHECK(lemma_alpha_rhs(0, 1, k, k + 1) == q / (qint(k + 2) * qint(k + 3)));
    CHECK(psi(qbase(k, k)) == lemma_beta_rhs(k, k));
  }
  CHECK_THROWS_AS(lemma_beta_rhs(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(lemma_alpha_rhs(0, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("q-Bernoulli polynomials") {
  const PolyZ z = PolyZ::variable();
  CHECK(beta_poly(0) == PolyZ(one));
  CHECK(beta_poly(1) == (z * FieldQ(2) - PolyZ(one)) / (q + one));
  CHECK(beta_poly(2) == (z * z * (FieldQ(3) * (q + one)) - z * (FieldQ(2) * (FieldQ(2) * q + one)) + PolyZ(q)) /
                            ((q + one) * (q * q + q + one)));
  for (long n = 0; n <= 8; ++n) {
    CHECK(beta_poly_closed(n) == beta_poly(n));
    CHECK(beta_poly(n).eval(FieldQ(0)) == beta_number(n));
  }
}

TEST_CASE("generating series") {
  const auto b3 = ogf_truncation(3);
  CHECK(b3[0] == one);
  CHECK(b3[1] == FieldQ(-1) / (q + one));
  CHECK(b3[2] == q / ((q + one) * (q * q + q + one)));
  const auto r1 = functional_residual_ogf(1);
  CHECK(r1.order() == 1);
  CHECK(r1[0] == q - one);
  const auto r = functional_residual_ogf(12);
  const auto e = functional_residual_egf(12);
  CHECK(r[0] == q - one);
  CHECK(r[1] == one);
  CHECK(e[0] == q - one);
  CHECK(e[1] == one);
  for (std::size_t n = 2; n < 12; ++n) {
    CHECK(r[n].is_zero());
    CHECK(e[n].is_zero());
  }
  const auto s1 = shifted_ogf(5, 1);
  for (std::size_t n = 0; n < 5; ++n) CHECK(s1[n] == beta_number(n + 1) / beta_number(1));
}

TEST_CASE("Jackson integrals") {
  const FieldQZ c = FieldQZ(1) + FieldQZ(q - one) * FieldQZ::z();
  const FieldQZ qz(q);
  CHECK(jackson_qintegral(PolyXZ(FieldQZ(1)), c * qz, qz) == qz * (FieldQZ(1) - c));
  for (long n = 0; n <= 4; ++n) {
    const auto mono = PolyXZ::monomial(FieldQZ(1), static_cast<int>(n));
    const FieldQZ expected = FieldQZ(q.pow(n + 1) * (one - q)) * (FieldQZ(1) - c.pow(n + 1)) /
                             FieldQZ(one - q.pow(n + 1));
    CHECK(jackson_qintegral(mono, c * qz, qz) == expected);
  }
  CHECK(jackson_qintegral(PolyX(x * x + PolyX(one)), q, q).is_zero());
}

TEST_CASE("big q-Legendre moments as integrals of the polynomials") {
  CHECK(legendre_moment(0) == PolyZ(one));
  CHECK(legendre_moment(1) == (PolyZ::variable() - PolyZ(one)) / (q + one));
  for (long n = 0; n <= 10; ++n) {
    CHECK(legendre_moment(n).eval(FieldQ(0)) == beta_number(n));
    CHECK(legendre_moment_closed(n) == legendre_moment(n));
  }
}

TEST_CASE("weighted functionals") {
  for (long n = 0; n <= 6; ++n) {
    CHECK(moment_general(n, {1, 1, 0, 0}) == beta_number(n));
    CHECK(moment_general(n, {1, 1, 0, 1}) == beta_number(n + 1) / beta_number(1));
    CHECK(moment_general(n, {1, 1, 1, 1}) == beta_number(n + 2) / beta_number(2));
  }
  CHECK(normalization_constant({1, 1, 0, 0}) == one);
  CHECK(normalization_constant({1, 1, 1, 1}) == q / (qint(2) * qint(3)));
  CHECK(general_weight({1, 1, 0, 1}) == -x);
  for (const GeneralParams p : {GeneralParams{2, 1, 1, 0}, GeneralParams{2, 2, 0, 1}, GeneralParams{1, 2, 1, 1}}) {
    CHECK(moment_general(0, p) == one);
  }
  CHECK_THROWS_AS(general_weight({0, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(general_weight({1, 1, -1, 0}), std::invalid_argument);
}
