#include <doctest.h>

#include "qbern/qcombinat.hpp"

using namespace qbern;

namespace {
const FieldQ q = FieldQ::q();
const FieldQ one(1);
const PolyX x = PolyX::variable();
}  // namespace

TEST_CASE("q-integers") {
  CHECK(qint(3) == q * q + q + one);
  CHECK(qint(0) == FieldQ(0));
  CHECK(qint(1) == one);
  CHECK(qint(-2) == -(q + one) / (q * q));
  for (long n = 0; n <= 8; ++n) CHECK(qint(n).eval(1) == n);
}

TEST_CASE("q-factorials and q-binomials") {
  CHECK(qfact(0) == one);
  CHECK(qfact(3) == (q + one) * (q * q + q + one));
  CHECK(qfact(4).eval(1) == 24);
  CHECK_THROWS_AS(qfact(-1), std::invalid_argument);
  CHECK(qbinom(6, 0) == one);
  CHECK(qbinom(4, 2) == q.pow(4) + q.pow(3) + FieldQ(2) * q * q + q + one);
  CHECK(qbinom(5, 2).eval(1) == 10);
  CHECK_THROWS_AS(qbinom(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(qbinom(2, -1), std::invalid_argument);
  // Pascal rule [n, k] = [n-1, k-1] + q^k [n-1, k].
  for (long n = 1; n <= 7; ++n) {
    for (long k = 1; k < n; ++k) {
      CHECK(qbinom(n, k) == qbinom(n - 1, k - 1) + FieldQ::q_power(k) * qbinom(n - 1, k));
    }
  }
}

TEST_CASE("q-Pochhammer symbols") {
  CHECK(qpoch(5, 0) == one);
  CHECK(qpoch(-3, 0) == one);
  CHECK(qpoch(1, 2) == (one - q) * (one - q * q));
  for (long k = 1; k <= 5; ++k) {
    for (long n = 0; n < k; ++n) CHECK(qpoch(-n, k).is_zero());
  }
  CHECK(qpoch(QPochSpec{2, 3}) == (one - q * q) * (one - q.pow(3)) * (one - q.pow(4)));
}

TEST_CASE("q-Pochhammer of the affine argument") {
  CHECK(qpoch_linear(0, 1) == PolyX(one));
  CHECK(qpoch_linear(1, 1) == PolyX(one - q) * (PolyX(one) + x * q));
  CHECK(qpoch_linear(2, 1) == qbase(2, 2) * qpoch(1, 2));
  for (long k = 0; k <= 4; ++k) {
    for (long a = 1; a <= 3; ++a) CHECK(qpoch_linear(k, a).eval(FieldQ(0)) == qpoch(a, k));
  }
}

TEST_CASE("q-binomial polynomials, Asc and Desc") {
  CHECK(qbase(3, 0) == PolyX(one));
  CHECK(qbase(1, 1) == PolyX(one) + x * q);
  CHECK(asc(0) == PolyX(one));
  CHECK(desc(0) == PolyX(one));
  CHECK(asc(2) == (PolyX(one) + x * q) * (PolyX(qint(2)) + x * (q * q)));
  CHECK(desc(1) == PolyX(one) - x);
  // At q = 1, qbase(i, d) is the binomial polynomial binom(i + x, d).
  const PolyQ b = eval_at_q(qbase(3, 2), 1);
  CHECK(b == PolyQ({RatQ(3), RatQ(5, 2), RatQ(1, 2)}));
}

TEST_CASE("terminating 2phi1 sums") {
  CHECK(phi21_terminating(0, 7, 3) == one);
  CHECK(phi21_terminating(2, 3, 3).is_zero());
  CHECK(phi21_terminating(1, 2, 2).is_zero());
  CHECK_FALSE(phi21_terminating(2, 5, 2).is_zero());
  CHECK_THROWS_AS(phi21_terminating(3, 1, -1), DivisionByZero);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(20, 10) == 184756);
}
