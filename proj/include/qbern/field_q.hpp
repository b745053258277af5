#pragma once

#include <gmpxx.h>

#include "qbern/poly.hpp"
#include "qbern/zpoly.hpp"

namespace qbern {

using PolyQ = Poly<RatQ>;

/// An element of Q(q), the field of rational functions in the indeterminate q.
///
/// Stored canonically as scale * N(q) / D(q) where N and D are primitive
/// integer polynomials with positive leading coefficients and no common
/// factor. Two equal rational functions therefore have identical
/// representations, and operator== is a structural comparison.
///
/// numerator()/denominator() expose the equivalent form over the rationals
/// with a monic denominator.
class FieldQ {
 public:
  FieldQ();
  FieldQ(long value);             // NOLINT: integer literals embed
  FieldQ(const mpq_class& value);  // NOLINT

  /// The indeterminate q.
  static FieldQ q();
  /// q^e for any integer e.
  static FieldQ q_power(long e);
  /// num / den; throws DivisionByZero if den is zero.
  static FieldQ from_polys(const PolyQ& num, const PolyQ& den);
  static FieldQ from_integer_polys(zpoly::ZPoly num, zpoly::ZPoly den);

  PolyQ numerator() const;
  /// Monic.
  PolyQ denominator() const;

  const mpq_class& scale() const { return scale_; }
  const zpoly::ZPoly& primitive_numerator() const { return num_; }
  const zpoly::ZPoly& primitive_denominator() const { return den_; }

  bool is_zero() const { return sgn(scale_) == 0; }
  bool is_polynomial() const { return zpoly::is_one(den_); }
  bool is_constant() const { return num_.size() == 1 && den_.size() == 1; }

  FieldQ inverse() const;
  FieldQ pow(long e) const;

  /// Specializes q to v. The stored form is already reduced, so removable
  /// singularities never trigger; a genuine pole throws PoleError.
  mpq_class eval(const mpq_class& v) const;

  friend FieldQ operator+(const FieldQ& a, const FieldQ& b);
  friend FieldQ operator-(const FieldQ& a, const FieldQ& b);
  friend FieldQ operator*(const FieldQ& a, const FieldQ& b);
  friend FieldQ operator/(const FieldQ& a, const FieldQ& b);
  friend FieldQ operator-(const FieldQ& a);
  friend bool operator==(const FieldQ& a, const FieldQ& b) = default;

  FieldQ& operator+=(const FieldQ& o) { return *this = *this + o; }
  FieldQ& operator-=(const FieldQ& o) { return *this = *this - o; }
  FieldQ& operator*=(const FieldQ& o) { return *this = *this * o; }
  FieldQ& operator/=(const FieldQ& o) { return *this = *this / o; }

 private:
  FieldQ(mpq_class scale, zpoly::ZPoly num, zpoly::ZPoly den);
  static FieldQ reduce(mpq_class scale, zpoly::ZPoly num, zpoly::ZPoly den);

  mpq_class scale_;
  zpoly::ZPoly num_;
  zpoly::ZPoly den_;
};

/// Specializes q in every coefficient.
inline Poly<RatQ> eval_at_q(const Poly<FieldQ>& p, const mpq_class& v) {
  return p.map([&](const FieldQ& c) { return c.eval(v); });
}

inline mpq_class eval_at_q(const FieldQ& a, const mpq_class& v) { return a.eval(v); }

}  // namespace qbern
