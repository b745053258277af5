#pragma once

// Dense univariate polynomials over an exact field K. Instantiated over the
// rationals (polynomials in q), over FieldQ (polynomials in z or in x), and
// over FieldQZ (polynomials in x with z-dependent coefficients).

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbern/errors.hpp"

namespace qbern {

using RatQ = mpq_class;

inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }

template <class K>
  requires requires(const K& k) {
    { k.is_zero() } -> std::convertible_to<bool>;
  }
bool is_zero(const K& k) {
  return k.is_zero();
}

template <class K>
class Poly {
 public:
  using scalar_type = K;

  Poly() = default;
  Poly(K constant) {  // NOLINT: scalars embed as constants
    if (!qbern::is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(K coef, int deg) {
    if (qbern::is_zero(coef)) return {};
    std::vector<K> c(static_cast<std::size_t>(deg) + 1, K(0));
    c.back() = std::move(coef);
    return Poly(std::move(c));
  }
  static Poly variable() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& lead() const { return c_.back(); }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(i)];
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (qbern::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (qbern::is_zero(b.c_[j])) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const K& s) {
    if (qbern::is_zero(s)) return {};
    for (auto& c : a.c_) c = c * s;
    a.trim();
    return a;
  }
  friend Poly operator*(const K& s, Poly a) { return std::move(a) * s; }
  friend Poly operator/(Poly a, const K& s) {
    if (qbern::is_zero(s)) throw DivisionByZero("polynomial divided by zero scalar");
    for (auto& c : a.c_) c = c / s;
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  K eval(const K& v) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
  }

  /// Evaluates with values from a larger ring V into which K embeds.
  template <class V>
  V eval_in(const V& v) const {
    V r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + V(*it);
    return r;
  }

  /// Coefficient-wise image under f.
  template <class F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const K&>()))>;
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(f(c));
    return Poly<R>(std::move(r));
  }

  Poly pow(unsigned e) const {
    Poly result(K(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  Poly monic() const {
    if (c_.empty()) return {};
    return *this / lead();
  }

  /// Euclidean division; throws DivisionByZero for b == 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<K> rem = a.c_;
    std::vector<K> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, K(0));
    const int db = b.degree();
    const bool unit_lead = b.lead() == K(1);
    for (int i = a.degree() - db; i >= 0; --i) {
      K& top = rem[static_cast<std::size_t>(i + db)];
      if (qbern::is_zero(top)) continue;
      K t = top;
      if (!unit_lead) t = t / b.lead();
      for (int j = 0; j <= db; ++j) {
        auto& r = rem[static_cast<std::size_t>(i + j)];
        r = r - t * b.c_[static_cast<std::size_t>(j)];
      }
      quo[static_cast<std::size_t>(i)] = std::move(t);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && qbern::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

/// Monic gcd over the field K (Euclid). gcd(0, 0) is 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Poly<K>(K(1));
    Poly<K> r = Poly<K>::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Exact quotient a / b; throws std::logic_error if the remainder is nonzero.
template <class K>
Poly<K> divexact(const Poly<K>& a, const Poly<K>& b) {
  if (b.degree() == 0) return a / b.lead();
  auto [q, r] = Poly<K>::divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("divexact: nonzero remainder");
  return q;
}

}  // namespace qbern
