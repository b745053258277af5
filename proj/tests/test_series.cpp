#include <doctest.h>

#include "qbern/field_q.hpp"
#include "qbern/series.hpp"

using namespace qbern;

namespace {
const FieldQ q = FieldQ::q();
using S = Series<FieldQ>;
}  // namespace

TEST_CASE("series product equals truncated polynomial product") {
  const Poly<FieldQ> a({FieldQ(1), q, FieldQ(2) / q});
  const Poly<FieldQ> b({q - FieldQ(1), FieldQ(0), FieldQ(3), q * q});
  const std::size_t n = 5;
  const S prod = S::from_poly(a, n) * S::from_poly(b, n);
  CHECK(prod == S::from_poly(a * b, n));
  CHECK(prod.order() == n);
}

TEST_CASE("reciprocal") {
  const std::size_t n = 6;
  const S one_minus_x = S::constant(FieldQ(1), n) - S::variable(n);
  const S geo = one_minus_x.reciprocal();
  for (std::size_t i = 0; i < n; ++i) CHECK(geo[i] == FieldQ(1));
  const S s = S::from_poly(Poly<FieldQ>({q, FieldQ(1), q * q}), n);
  CHECK(s * s.reciprocal() == S::constant(FieldQ(1), n));
  CHECK_THROWS_AS(S::variable(n).reciprocal(), DivisionByZero);
}

TEST_CASE("substitution") {
  const std::size_t n = 5;
  const S s = S::from_poly(Poly<FieldQ>({FieldQ(3), FieldQ(1), q}), n);
  CHECK(s.substitute(S(n)) == S::constant(FieldQ(3), n));
  // x -> x/(1-x) in 1/(1-x) gives (1-x)/(1-2x).
  const S x = S::variable(n);
  const S one = S::constant(FieldQ(1), n);
  const S inner = x * (one - x).reciprocal();
  const S lhs = (one - x).reciprocal().substitute(inner);
  const S rhs = (one - x) * (one - x * FieldQ(2)).reciprocal();
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(s.substitute(one), std::invalid_argument);
}

TEST_CASE("order mismatch is rejected") {
  CHECK_THROWS_AS(S(3) + S(4), std::invalid_argument);
  CHECK_THROWS_AS(S(3) * S(4), std::invalid_argument);
}
