#include <doctest.h>

#include <random>

#include "qbern/zpoly.hpp"

using namespace qbern::zpoly;

namespace {

ZPoly P(std::initializer_list<long> c) {
  ZPoly p;
  for (long v : c) p.emplace_back(v);
  trim(p);
  return p;
}

ZPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-9, 9);
  ZPoly p;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) p.emplace_back(coef(rng));
  if (sgn(p.back()) == 0) p.back() = 1;
  return p;
}

}  // namespace

TEST_CASE("integer polynomial basics") {
  CHECK(degree(ZPoly{}) == -1);
  CHECK(degree(P({1, 2, 3})) == 2);
  CHECK(is_one(P({1})));
  CHECK(add(P({1, 1}), P({-1, -1})).empty());
  CHECK(mul(P({1, 1}), P({-1, 1})) == P({-1, 0, 1}));
  CHECK(linear_combination(P({1, 2}), 3, P({0, 1}), -6) == P({3}));
}

TEST_CASE("content and primitive part") {
  ZPoly p = P({-6, 0, -4});
  CHECK(content(p) == 2);
  const mpz_class f = make_primitive(p);
  CHECK(f == -2);
  CHECK(p == P({3, 0, 2}));
}

TEST_CASE("exact division") {
  ZPoly quo;
  CHECK(divides(P({-1, 0, 1}), P({1, 1}), &quo));
  CHECK(quo == P({-1, 1}));
  CHECK_FALSE(divides(P({1, 0, 1}), P({1, 1}), nullptr));
  CHECK(divexact(P({-1, 0, 0, 1}), P({-1, 1})) == P({1, 1, 1}));
}

TEST_CASE("gcd of small examples") {
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(gcd(P({2, 2}), P({4, 4})) == P({1, 1}));
  CHECK(gcd(P({1, 1}), P({-1, 1})) == P({1}));
  CHECK(gcd(P({0, 0, 3}), P({0, 6})) == P({0, 1}));
}

TEST_CASE("modular gcd agrees with the pseudo-remainder gcd") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 150; ++trial) {
    const ZPoly common = random_poly(rng, 3);
    const ZPoly a = mul(common, random_poly(rng, 4));
    const ZPoly b = mul(common, random_poly(rng, 4));
    const ZPoly g = gcd(a, b);
    CHECK(g == gcd_prs(a, b));
    CHECK(divides(a, g, nullptr));
    CHECK(divides(b, g, nullptr));
    CHECK(divides(g, gcd_prs(common, common), nullptr));
  }
}

TEST_CASE("gcd with large coefficients") {
  // (q^20 - 1) and (q^30 - 1) share q^10 - 1.
  ZPoly a(21), b(31), expected(11);
  a[0] = -1, a[20] = 1;
  b[0] = -1, b[30] = 1;
  expected[0] = -1, expected[10] = 1;
  CHECK(gcd(a, b) == expected);
  ZPoly big = P({1, 1});
  for (auto& c : big) c *= mpz_class("123456789012345678901234567890");
  ZPoly prim = big;
  make_primitive(prim);
  CHECK(gcd(mul(big, P({1, 0, 1})), mul(big, P({2, 3}))) == prim);
}
