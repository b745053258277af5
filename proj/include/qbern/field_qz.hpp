#pragma once

#include "qbern/field_q.hpp"
#include "qbern/poly.hpp"

namespace qbern {

/// Polynomials in z (or x) with coefficients in Q(q).
using PolyZ = Poly<FieldQ>;

/// An element of Q(q)(z): a reduced quotient of polynomials in z with
/// coefficients in Q(q) and a monic denominator.
class FieldQZ {
 public:
  FieldQZ();
  FieldQZ(long value);            // NOLINT: integer literals embed
  FieldQZ(const FieldQ& value);   // NOLINT: Q(q) embeds as z-degree 0
  explicit FieldQZ(PolyZ num);
  /// num / den, reduced; throws DivisionByZero if den is zero.
  FieldQZ(PolyZ num, PolyZ den);

  /// The indeterminate z.
  static FieldQZ z();

  const PolyZ& numerator() const { return num_; }
  const PolyZ& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  FieldQZ inverse() const;
  FieldQZ pow(long e) const;

  /// Substitutes z = v; a genuine pole throws PoleError.
  FieldQ eval_z(const FieldQ& v) const;

  friend FieldQZ operator+(const FieldQZ& a, const FieldQZ& b);
  friend FieldQZ operator-(const FieldQZ& a, const FieldQZ& b);
  friend FieldQZ operator*(const FieldQZ& a, const FieldQZ& b);
  friend FieldQZ operator/(const FieldQZ& a, const FieldQZ& b);
  friend FieldQZ operator-(const FieldQZ& a);
  friend bool operator==(const FieldQZ& a, const FieldQZ& b) = default;

  FieldQZ& operator+=(const FieldQZ& o) { return *this = *this + o; }
  FieldQZ& operator-=(const FieldQZ& o) { return *this = *this - o; }
  FieldQZ& operator*=(const FieldQZ& o) { return *this = *this * o; }
  FieldQZ& operator/=(const FieldQZ& o) { return *this = *this / o; }

 private:
  struct Reduced {};
  FieldQZ(PolyZ num, PolyZ den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  PolyZ num_;
  PolyZ den_;
};

/// Polynomials in x with coefficients in Q(q)(z).
using PolyXZ = Poly<FieldQZ>;

/// Embeds a polynomial with Q(q) coefficients into one with Q(q)(z) coefficients.
inline PolyXZ embed_z(const PolyZ& p) {
  return p.map([](const FieldQ& c) { return FieldQZ(c); });
}

/// Substitutes z = v in every coefficient.
inline PolyZ eval_z(const PolyXZ& p, const FieldQ& v) {
  return p.map([&](const FieldQZ& c) { return c.eval_z(v); });
}

}  // namespace qbern
