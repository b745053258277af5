#pragma once

// J-fractions 1/(1 + a_0 x - b_1 x^2/(1 + a_1 x - b_2 x^2/(...))) and
// S-fractions 1/(1 + c_1 x/(1 + c_2 x/(...))), their series expansions,
// contraction, and the closed-form S-coefficients of the four beta series.

#include <cstddef>
#include <functional>
#include <string>

#include "qbern/field_q.hpp"
#include "qbern/field_qz.hpp"
#include "qbern/orthopoly.hpp"
#include "qbern/series.hpp"

namespace qbern {

template <class K>
struct JFraction {
  std::function<K(long)> a;  // n >= 0
  std::function<K(long)> b;  // n >= 1
};

template <class K>
struct SFraction {
  std::function<K(long)> c;  // k >= 1
};

template <class K>
JFraction<K> jfraction_from(const Recurrence<K>& rec) {
  return {rec.a, rec.b};
}

/// Expansion to order N (N stored coefficients), evaluated bottom-up from
/// `levels` levels with the innermost tail replaced by 1. levels = 0 picks
/// the minimum depth ceil(N/2) + 1.
template <class K>
Series<K> jfraction_series(const JFraction<K>& j, std::size_t order, std::size_t levels = 0) {
  using S = Series<K>;
  if (levels == 0) levels = (order + 1) / 2 + 1;
  const S one = S::constant(K(1), order);
  const S x = S::variable(order);
  const S x2 = x * x;
  S f = one;
  for (std::size_t l = levels; l-- > 0;) {
    const long ll = static_cast<long>(l);
    f = (one + x * j.a(ll) - x2 * f * j.b(ll + 1)).reciprocal();
  }
  return f;
}

/// Expansion to order N; levels = 0 picks the minimum depth N + 1.
template <class K>
Series<K> sfraction_series(const SFraction<K>& s, std::size_t order, std::size_t levels = 0) {
  using S = Series<K>;
  if (levels == 0) levels = order + 1;
  const S one = S::constant(K(1), order);
  const S x = S::variable(order);
  S f = one;
  for (std::size_t k = levels; k >= 1; --k) {
    f = (one + x * f * s.c(static_cast<long>(k))).reciprocal();
  }
  return f;
}

/// The J-fraction with the same expansion: a_0 = c_1, a_n = c_2n + c_2n+1,
/// b_n = c_2n-1 c_2n.
template <class K>
JFraction<K> contract(const SFraction<K>& s) {
  auto c = s.c;
  return {[c](long n) { return n == 0 ? c(1) : c(2 * n) + c(2 * n + 1); },
          [c](long n) { return c(2 * n - 1) * c(2 * n); }};
}

/// True when the two fractions agree on a_0..a_n_max and b_1..b_n_max.
template <class K>
bool same_coefficients(const JFraction<K>& x, const JFraction<K>& y, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    if (!(x.a(n) == y.a(n))) return false;
    if (n >= 1 && !(x.b(n) == y.b(n))) return false;
  }
  return true;
}

enum class SeriesId { B, B1, B2, Bz };

/// "B", "B1", "B2", "Bz"; throws std::invalid_argument otherwise.
SeriesId parse_series_id(const std::string& name);
std::string series_name(SeriesId id);

/// Closed-form S-coefficients of sum beta_n x^n, sum beta_{n+1}/beta_1 x^n and
/// sum beta_{n+2}/beta_2 x^n. Throws std::invalid_argument for Bz.
SFraction<FieldQ> closed_sfraction(SeriesId id);
/// Closed-form S-coefficients of sum legendre_moment(n) x^n.
SFraction<FieldQZ> closed_sfraction_z();

/// The recurrence whose J-fraction the contraction must reproduce
/// (q-Hahn with (c,d) = (0,0), (0,1), (1,1)). Throws for Bz.
Recurrence<FieldQ> target_recurrence(SeriesId id);

/// The first `order` coefficients of the series the S-fraction expands.
/// Throws for Bz.
Series<FieldQ> target_series(SeriesId id, std::size_t order);
Series<FieldQZ> target_series_z(std::size_t order);

}  // namespace qbern
