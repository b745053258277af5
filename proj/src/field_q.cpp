#include "qbern/field_q.hpp"

#include <utility>

namespace qbern {

using zpoly::ZPoly;

namespace {

const ZPoly& one_poly() {
  static const ZPoly one{mpz_class(1)};
  return one;
}

// Clears denominators: p == integer_poly / common_den.
ZPoly clear_denominators(const PolyQ& p, mpz_class& common_den) {
  common_den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(),
            c.get_den_mpz_t());
  }
  ZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpq_class& c = p.coeffs()[i];
    mpz_divexact(r[i].get_mpz_t(), common_den.get_mpz_t(), c.get_den_mpz_t());
    r[i] *= c.get_num();
  }
  return r;
}

// Homogenized evaluation sum p_i s^i t^(deg - i) for v = s / t.
mpz_class eval_homogeneous(const ZPoly& p, const mpz_class& s, const mpz_class& t) {
  mpz_class acc = 0;
  mpz_class tpow = 1;
  // Horner on p(s/t) * t^deg: acc = acc * s + p_i * t^(deg-i).
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * s + *it * tpow;
    tpow *= t;
  }
  return acc;
}

}  // namespace

FieldQ::FieldQ() : scale_(0), num_(one_poly()), den_(one_poly()) {}

FieldQ::FieldQ(long value) : FieldQ(mpq_class(value)) {}

FieldQ::FieldQ(const mpq_class& value)
    : scale_(value), num_(one_poly()), den_(one_poly()) {
  scale_.canonicalize();
}

FieldQ::FieldQ(mpq_class scale, ZPoly num, ZPoly den)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {}

FieldQ FieldQ::q() { return FieldQ(1, ZPoly{0, 1}, one_poly()); }

FieldQ FieldQ::q_power(long e) {
  ZPoly mono(static_cast<std::size_t>(e >= 0 ? e : -e) + 1);
  mono.back() = 1;
  if (e >= 0) return FieldQ(1, std::move(mono), one_poly());
  return FieldQ(1, one_poly(), std::move(mono));
}

FieldQ FieldQ::reduce(mpq_class scale, ZPoly num, ZPoly den) {
  const mpz_class cn = zpoly::make_primitive(num);
  const mpz_class cd = zpoly::make_primitive(den);
  if (sgn(cd) == 0) throw DivisionByZero("rational function with zero denominator");
  scale.canonicalize();
  if (sgn(cn) == 0 || sgn(scale) == 0) return FieldQ();
  mpq_class factor(cn, cd);
  factor.canonicalize();
  scale *= factor;
  if (!zpoly::is_one(den) && num.size() > 1) {
    ZPoly g = zpoly::gcd(num, den);
    if (!zpoly::is_one(g)) {
      num = zpoly::divexact(num, g);
      den = zpoly::divexact(den, g);
    }
  }
  return FieldQ(std::move(scale), std::move(num), std::move(den));
}

FieldQ FieldQ::from_integer_polys(ZPoly num, ZPoly den) {
  zpoly::trim(num);
  zpoly::trim(den);
  return reduce(1, std::move(num), std::move(den));
}

FieldQ FieldQ::from_polys(const PolyQ& num, const PolyQ& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  mpz_class ln;
  mpz_class ld;
  ZPoly n = clear_denominators(num, ln);
  ZPoly d = clear_denominators(den, ld);
  return reduce(mpq_class(ld, ln), std::move(n), std::move(d));
}

PolyQ FieldQ::numerator() const {
  if (is_zero()) return {};
  const mpq_class factor = scale_ / mpq_class(den_.back());
  std::vector<RatQ> c(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) c[i] = factor * num_[i];
  return PolyQ(std::move(c));
}

PolyQ FieldQ::denominator() const {
  std::vector<RatQ> c(den_.size());
  for (std::size_t i = 0; i < den_.size(); ++i) {
    c[i] = mpq_class(den_[i], den_.back());
    c[i].canonicalize();
  }
  return PolyQ(std::move(c));
}

FieldQ FieldQ::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
  return FieldQ(1 / scale_, den_, num_);
}

FieldQ FieldQ::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldQ result(1);
  FieldQ base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

mpq_class FieldQ::eval(const mpq_class& v) const {
  if (is_zero()) return 0;
  const mpz_class& s = v.get_num();
  const mpz_class& t = v.get_den();
  const mpz_class dv = eval_homogeneous(den_, s, t);
  if (sgn(dv) == 0) throw PoleError("rational function has a pole at q = " + v.get_str());
  const mpz_class nv = eval_homogeneous(num_, s, t);
  // num(v) = nv / t^dn, den(v) = dv / t^dd.
  mpz_class tpow;
  const long dn = zpoly::degree(num_);
  const long dd = zpoly::degree(den_);
  mpq_class r;
  if (dd >= dn) {
    mpz_pow_ui(tpow.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(dd - dn));
    r = mpq_class(nv * tpow, dv);
  } else {
    mpz_pow_ui(tpow.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(dn - dd));
    r = mpq_class(nv, dv * tpow);
  }
  r.canonicalize();
  return scale_ * r;
}

FieldQ operator+(const FieldQ& a, const FieldQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  // Common integer multiplier for the two scales.
  const mpz_class& da = a.scale_.get_den();
  const mpz_class& db = b.scale_.get_den();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  const mpz_class sa = a.scale_.get_num() * (l / da);
  const mpz_class sb = b.scale_.get_num() * (l / db);

  if (a.den_ == b.den_) {
    ZPoly t = zpoly::linear_combination(a.num_, sa, b.num_, sb);
    return FieldQ::reduce(mpq_class(1, l), std::move(t), a.den_);
  }

  const ZPoly g = zpoly::gcd(a.den_, b.den_);
  const bool trivial = zpoly::is_one(g);
  const ZPoly ea = trivial ? a.den_ : zpoly::divexact(a.den_, g);
  const ZPoly eb = trivial ? b.den_ : zpoly::divexact(b.den_, g);
  ZPoly t = zpoly::linear_combination(zpoly::mul(a.num_, eb), sa,
                                      zpoly::mul(b.num_, ea), sb);
  const mpz_class ct = zpoly::make_primitive(t);
  if (sgn(ct) == 0) return FieldQ();
  mpq_class scale(ct, l);
  scale.canonicalize();
  // Only factors of g can cancel.
  ZPoly gr = g;
  if (!trivial) {
    ZPoly h = zpoly::gcd(t, g);
    if (!zpoly::is_one(h)) {
      t = zpoly::divexact(t, h);
      gr = zpoly::divexact(g, h);
    }
  }
  ZPoly den = zpoly::mul(zpoly::mul(gr, ea), eb);
  return FieldQ(std::move(scale), std::move(t), std::move(den));
}

FieldQ operator-(const FieldQ& a) {
  FieldQ r = a;
  r.scale_ = -r.scale_;
  return r;
}

FieldQ operator-(const FieldQ& a, const FieldQ& b) { return a + (-b); }

FieldQ operator*(const FieldQ& a, const FieldQ& b) {
  if (a.is_zero() || b.is_zero()) return FieldQ();
  mpq_class scale = a.scale_ * b.scale_;
  if (a.is_polynomial() && b.is_polynomial()) {
    return FieldQ(std::move(scale), zpoly::mul(a.num_, b.num_), a.den_);
  }
  ZPoly na = a.num_, db = b.den_;
  ZPoly nb = b.num_, da = a.den_;
  if (!zpoly::is_one(db) && na.size() > 1) {
    ZPoly g = zpoly::gcd(na, db);
    if (!zpoly::is_one(g)) {
      na = zpoly::divexact(na, g);
      db = zpoly::divexact(db, g);
    }
  }
  if (!zpoly::is_one(da) && nb.size() > 1) {
    ZPoly g = zpoly::gcd(nb, da);
    if (!zpoly::is_one(g)) {
      nb = zpoly::divexact(nb, g);
      da = zpoly::divexact(da, g);
    }
  }
  return FieldQ(std::move(scale), zpoly::mul(na, nb), zpoly::mul(da, db));
}

FieldQ operator/(const FieldQ& a, const FieldQ& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q(q)");
  return a * b.inverse();
}

}  // namespace qbern
