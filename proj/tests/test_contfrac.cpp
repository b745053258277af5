#include <doctest.h>

#include <random>

#include "qbern/contfrac.hpp"

using namespace qbern;

namespace {
const FieldQ q = FieldQ::q();
const FieldQ one(1);
}  // namespace

TEST_CASE("trivial fractions") {
  const JFraction<FieldQ> zero_j{[](long) { return FieldQ(0); }, [](long) { return FieldQ(0); }};
  CHECK(jfraction_series(zero_j, 6) == Series<FieldQ>::constant(one, 6));
  const SFraction<FieldQ> zero_s{[](long) { return FieldQ(0); }};
  CHECK(sfraction_series(zero_s, 6) == Series<FieldQ>::constant(one, 6));
  const FieldQ c1 = q + one;
  const SFraction<FieldQ> single{[c1](long k) { return k == 1 ? c1 : FieldQ(0); }};
  const auto s = sfraction_series(single, 3);
  CHECK(s[0] == one);
  CHECK(s[1] == -c1);
  CHECK(s[2] == c1 * c1);
  const auto j = contract(zero_s);
  CHECK(j.a(0).is_zero());
  CHECK(j.b(3).is_zero());
}

TEST_CASE("J-fraction of a recurrence expands to its moments") {
  const auto rec = hahn_recurrence_00();
  const auto s = jfraction_series(jfraction_from(rec), 5);
  for (std::size_t n = 0; n < 5; ++n) CHECK(s[n] == beta_number(static_cast<long>(n)));
  CHECK(s[1] == -rec.a(0));
}

TEST_CASE("closed-form S-fractions") {
  const auto b = closed_sfraction(SeriesId::B);
  CHECK(b.c(1) == one / (q + one));
  CHECK(b.c(2) == FieldQ(-1) / ((q + one) * (q * q + q + one)));
  CHECK(closed_sfraction(SeriesId::B2).c(1) == (q - one) / (q * q + one));
  const auto s = sfraction_series(b, 3);
  CHECK(s[0] == one);
  CHECK(s[1] == FieldQ(-1) / (q + one));
  CHECK(s[2] == q / ((q + one) * (q * q + q + one)));
  const auto bz = closed_sfraction_z();
  for (long k = 1; k <= 8; ++k) CHECK(bz.c(k).eval_z(FieldQ(0)) == b.c(k));
  CHECK_THROWS_AS(closed_sfraction(SeriesId::Bz), std::invalid_argument);
}

TEST_CASE("contraction reproduces the recurrences") {
  for (SeriesId id : {SeriesId::B, SeriesId::B1, SeriesId::B2}) {
    CHECK(same_coefficients(contract(closed_sfraction(id)), jfraction_from(target_recurrence(id)), 12));
    CHECK(sfraction_series(closed_sfraction(id), 10) == target_series(id, 10));
  }
  CHECK(same_coefficients(contract(closed_sfraction_z()), jfraction_from(legendre_recurrence()), 8));
  CHECK(sfraction_series(closed_sfraction_z(), 6) == target_series_z(6));
  // A wrong recurrence is detected.
  CHECK_FALSE(same_coefficients(contract(closed_sfraction(SeriesId::B)), jfraction_from(hahn_recurrence_11()), 3));
}

TEST_CASE("contraction preserves the expansion for random coefficients") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FieldQ> c{FieldQ(0)};
    for (int k = 1; k <= 24; ++k) {
      mpq_class r(num(rng), den(rng));
      r.canonicalize();
      c.push_back(FieldQ(r) + FieldQ(num(rng)) * q);
    }
    const SFraction<FieldQ> s{[c](long k) { return c.at(static_cast<std::size_t>(k)); }};
    for (std::size_t n = 1; n <= 10; ++n) CHECK(jfraction_series(contract(s), n) == sfraction_series(s, n));
  }
}

TEST_CASE("deeper truncation leaves the stored coefficients unchanged") {
  const auto s = closed_sfraction(SeriesId::B1);
  CHECK(sfraction_series(s, 8) == sfraction_series(s, 8, 14));
  const auto j = jfraction_from(hahn_recurrence_11());
  CHECK(jfraction_series(j, 8) == jfraction_series(j, 8, 9));
}

TEST_CASE("series names") {
  CHECK(parse_series_id("B1") == SeriesId::B1);
  CHECK(series_name(SeriesId::Bz) == "Bz");
  CHECK_THROWS_AS(parse_series_id("B3"), std::invalid_argument);
}
