#include "qbern/field_qz.hpp"

#include <utility>

namespace qbern {

namespace {

const PolyZ& one() {
  static const PolyZ p(FieldQ(1));
  return p;
}

}  // namespace

FieldQZ::FieldQZ() : den_(one()) {}

FieldQZ::FieldQZ(long value) : FieldQZ(FieldQ(value)) {}

FieldQZ::FieldQZ(const FieldQ& value) : num_(value), den_(one()) {}

FieldQZ::FieldQZ(PolyZ num) : num_(std::move(num)), den_(one()) {}

FieldQZ::FieldQZ(PolyZ num, PolyZ den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = one();
    return;
  }
  if (den.degree() == 0) {
    num_ = num / den.lead();
    den_ = one();
    return;
  }
  if (num.degree() > 0) {
    PolyZ g = gcd(num, den);
    if (g.degree() > 0) {
      num = divexact(num, g);
      den = divexact(den, g);
    }
  }
  FieldQ lead = den.lead();
  num_ = num / lead;
  den_ = den / lead;
}

FieldQZ FieldQZ::z() { return FieldQZ(PolyZ::variable()); }

FieldQZ FieldQZ::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)(z)");
  return FieldQZ(den_, num_);
}

FieldQZ FieldQZ::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldQZ result(1);
  FieldQZ base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldQ FieldQZ::eval_z(const FieldQ& v) const {
  FieldQ d = den_.eval(v);
  if (d.is_zero()) throw PoleError("rational function of z has a pole at the given point");
  return num_.eval(v) / d;
}

FieldQZ operator+(const FieldQZ& a, const FieldQZ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) return FieldQZ(a.num_ + b.num_, a.den_, FieldQZ::Reduced{});
    return FieldQZ(a.num_ + b.num_, a.den_);
  }
  PolyZ g = gcd(a.den_, b.den_);
  PolyZ ea = divexact(a.den_, g);
  PolyZ eb = divexact(b.den_, g);
  PolyZ t = a.num_ * eb + b.num_ * ea;
  if (t.is_zero()) return FieldQZ();
  if (g.degree() > 0) {
    PolyZ h = gcd(t, g);
    if (h.degree() > 0) {
      t = divexact(t, h);
      g = divexact(g, h);
    }
  }
  return FieldQZ(std::move(t), g * ea * eb, FieldQZ::Reduced{});
}

FieldQZ operator-(const FieldQZ& a) { return FieldQZ(-a.num_, a.den_, FieldQZ::Reduced{}); }

FieldQZ operator-(const FieldQZ& a, const FieldQZ& b) { return a + (-b); }

FieldQZ operator*(const FieldQZ& a, const FieldQZ& b) {
  if (a.is_zero() || b.is_zero()) return FieldQZ();
  if (a.is_polynomial() && b.is_polynomial()) {
    return FieldQZ(a.num_ * b.num_, a.den_, FieldQZ::Reduced{});
  }
  PolyZ na = a.num_, db = b.den_;
  PolyZ nb = b.num_, da = a.den_;
  if (db.degree() > 0 && na.degree() > 0) {
    PolyZ g = gcd(na, db);
    if (g.degree() > 0) {
      na = divexact(na, g);
      db = divexact(db, g);
    }
  }
  if (da.degree() > 0 && nb.degree() > 0) {
    PolyZ g = gcd(nb, da);
    if (g.degree() > 0) {
      nb = divexact(nb, g);
      da = divexact(da, g);
    }
  }
  return FieldQZ(na * nb, da * db, FieldQZ::Reduced{});
}

FieldQZ operator/(const FieldQZ& a, const FieldQZ& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q(q)(z)");
  return a * b.inverse();
}

}  // namespace qbern
