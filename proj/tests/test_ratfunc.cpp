#include <doctest.h>

#include <random>

#include "qbern/errors.hpp"
#include "qbern/field_q.hpp"
#include "qbern/field_qz.hpp"

using namespace qbern;

namespace {

const FieldQ q = FieldQ::q();

PolyQ poly(std::initializer_list<long> c) {
  std::vector<RatQ> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ(std::move(v));
}

FieldQ random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<long> coef(-5, 5);
  auto make = [&](bool nonzero) {
    for (;;) {
      std::vector<RatQ> c;
      const int d = deg(rng);
      for (int i = 0; i <= d; ++i) {
        RatQ r(coef(rng), 1 + (coef(rng) + 5) % 3);
        r.canonicalize();
        c.push_back(r);
      }
      PolyQ p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return FieldQ::from_polys(make(false), make(true));
}

}  // namespace

TEST_CASE("canonical reduction") {
  const FieldQ a = FieldQ::from_polys(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(a.numerator() == poly({1, 1}));
  CHECK(a.denominator() == poly({1}));
  CHECK(a == q + FieldQ(1));
  CHECK(a.is_polynomial());

  // Same function, different constructions, identical representation.
  const FieldQ b = FieldQ::from_polys(poly({2, 2}), poly({4, 4, 0, 0}));
  CHECK(b == FieldQ(mpq_class(1, 2)));
  CHECK(b.is_constant());
  CHECK(FieldQ::from_polys(poly({0, 6}), poly({3, 3})).denominator() == poly({1, 1}));
}

TEST_CASE("monic denominator, rational scale") {
  const FieldQ a = FieldQ::from_polys(poly({1}), poly({2, 4}));  // 1/(4q+2)
  CHECK(a.denominator() == PolyQ({RatQ(1, 2), RatQ(1)}));
  CHECK(a.numerator() == PolyQ(RatQ(1, 4)));
}

TEST_CASE("arithmetic examples") {
  const FieldQ beta1 = FieldQ(-1) / (q + FieldQ(1));
  CHECK(beta1 * beta1 == FieldQ(1) / (q * q + FieldQ(2) * q + FieldQ(1)));
  CHECK(beta1 + FieldQ(0) == beta1);
  CHECK(beta1 - beta1 == FieldQ(0));
  CHECK((beta1 * beta1).denominator() == poly({1, 2, 1}));
  CHECK(FieldQ::q_power(-2) * q * q == FieldQ(1));
  CHECK(FieldQ::q_power(3) == q * q * q);
  CHECK(beta1.pow(-2) == (q + FieldQ(1)).pow(2));
  CHECK(beta1.pow(0) == FieldQ(1));
}

TEST_CASE("division by zero is a distinct error") {
  CHECK_THROWS_AS(FieldQ(1) / FieldQ(0), DivisionByZero);
  CHECK_THROWS_AS(FieldQ(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(FieldQ::from_polys(poly({1}), PolyQ()), DivisionByZero);
}

TEST_CASE("evaluation at rational q") {
  const FieldQ beta2 = q / ((q + FieldQ(1)) * (q * q + q + FieldQ(1)));
  CHECK(beta2.eval(1) == mpq_class(1, 6));
  CHECK(FieldQ::from_polys(poly({-1, 0, 1}), poly({-1, 1})).eval(1) == 2);
  CHECK_THROWS_AS((FieldQ(1) / (q - FieldQ(1))).eval(1), PoleError);
  CHECK(FieldQ::q_power(-2).eval(mpq_class(1, 3)) == 9);
  CHECK_THROWS_AS(FieldQ::q_power(-1).eval(0), PoleError);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 120; ++i) {
    const FieldQ a = random_element(rng);
    const FieldQ b = random_element(rng);
    const FieldQ c = random_element(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == FieldQ(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == FieldQ(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("evaluation commutes with arithmetic away from poles") {
  std::mt19937 rng(7);
  const mpq_class points[] = {2, mpq_class(1, 3), -5, mpq_class(7, 2)};
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const FieldQ a = random_element(rng);
    const FieldQ b = random_element(rng);
    for (const auto& v : points) {
      mpq_class av, bv;
      try {
        av = a.eval(v);
        bv = b.eval(v);
      } catch (const PoleError&) {
        continue;
      }
      CHECK((a * b).eval(v) == av * bv);
      CHECK((a + b).eval(v) == av + bv);
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("rational functions in z over Q(q)") {
  const FieldQZ z = FieldQZ::z();
  const FieldQZ one(1);
  CHECK(z * z.inverse() == one);
  CHECK((z * z - one) / (z - one) == z + one);
  CHECK(((z * z - one) / (z - one)).is_polynomial());
  const FieldQZ f = (z + FieldQZ(q)) / (z - one);
  CHECK(f.denominator().lead() == FieldQ(1));
  CHECK(f.eval_z(FieldQ(0)) == -q);
  CHECK_THROWS_AS(f.eval_z(FieldQ(1)), PoleError);
  CHECK_THROWS_AS(one / FieldQZ(0), DivisionByZero);
  CHECK(FieldQZ(q) * FieldQZ(FieldQ(1) / q) == one);
  CHECK(f.pow(2) * f.pow(-2) == one);
}
