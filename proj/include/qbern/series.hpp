#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbern/errors.hpp"
#include "qbern/poly.hpp"

namespace qbern {

/// Truncated formal power series in x: exactly `order` stored coefficients
/// for x^0 .. x^(order-1). All arithmetic truncates at the same order.
template <class K>
class Series {
 public:
  explicit Series(std::size_t order) : c_(order, K(0)) {}
  Series(std::size_t order, const std::vector<K>& coeffs) : c_(order, K(0)) {
    for (std::size_t i = 0; i < order && i < coeffs.size(); ++i) c_[i] = coeffs[i];
  }
  static Series from_poly(const Poly<K>& p, std::size_t order) {
    return Series(order, p.coeffs());
  }
  static Series constant(const K& v, std::size_t order) { return Series(order, {v}); }
  /// x (or 0 when order < 2).
  static Series variable(std::size_t order) { return Series(order, {K(0), K(1)}); }

  std::size_t order() const { return c_.size(); }
  const K& operator[](std::size_t i) const { return c_.at(i); }
  K& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<K>& coeffs() const { return c_; }

  friend Series operator+(const Series& a, const Series& b) {
    check_order(a, b);
    Series r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    check_order(a, b);
    Series r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    check_order(a, b);
    const std::size_t n = a.order();
    Series r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (qbern::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (qbern::is_zero(b.c_[j])) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend Series operator*(Series a, const K& s) {
    for (auto& c : a.c_) c = c * s;
    return a;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  /// 1 / s; throws DivisionByZero when the constant term vanishes.
  Series reciprocal() const {
    const std::size_t n = order();
    Series r(n);
    if (n == 0) return r;
    if (qbern::is_zero(c_[0])) {
      throw DivisionByZero("series reciprocal needs a nonzero constant term");
    }
    const K inv = K(1) / c_[0];
    r.c_[0] = inv;
    for (std::size_t k = 1; k < n; ++k) {
      K acc(0);
      for (std::size_t j = 1; j <= k; ++j) {
        if (qbern::is_zero(c_[j])) continue;
        acc = acc + c_[j] * r.c_[k - j];
      }
      r.c_[k] = -(acc * inv);
    }
    return r;
  }

  /// The composition s(inner(x)); inner must have zero constant term.
  Series substitute(const Series& inner) const {
    check_order(*this, inner);
    const std::size_t n = order();
    if (n == 0) return *this;
    if (!qbern::is_zero(inner.c_[0])) {
      throw std::invalid_argument("series substitution needs an inner series without constant term");
    }
    // Horner: s0 + inner*(s1 + inner*(s2 + ...)).
    Series r(n);
    for (std::size_t k = n; k-- > 0;) {
      r = r * inner;
      r.c_[0] = r.c_[0] + c_[k];
    }
    return r;
  }

 private:
  static void check_order(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  }

  std::vector<K> c_;
};

}  // namespace qbern
