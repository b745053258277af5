#pragma once

// Hankel determinants of moment sequences and their closed-form
// factorizations.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbern/bernoulli.hpp"
#include "qbern/field_q.hpp"
#include "qbern/field_qz.hpp"
#include "qbern/orthopoly.hpp"

namespace qbern {

namespace detail {

inline void check_hankel_length(std::size_t have, std::size_t n, std::size_t shift) {
  if (n > 0 && have < 2 * n - 1 + shift) {
    throw std::invalid_argument("hankel_det: need at least 2n - 1 + shift moments");
  }
}

}  // namespace detail

/// det (moments[i+j+shift])_{0<=i,j<n} by Gaussian elimination over K.
template <class K>
K hankel_det(const std::vector<K>& moments, std::size_t n, std::size_t shift = 0) {
  detail::check_hankel_length(moments.size(), n, shift);
  std::vector<std::vector<K>> m(n, std::vector<K>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = moments[i + j + shift];
  }
  K det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && qbern::is_zero(m[piv][col])) ++piv;
    if (piv == n) return K(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    const K inv = K(1) / m[col][col];
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (qbern::is_zero(m[r][col])) continue;
      const K f = m[r][col] * inv;
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Entries that are all polynomials in z go through fraction-free Bareiss
/// elimination over Q(q)[z]; anything else falls back to the field version.
FieldQZ hankel_det(const std::vector<FieldQZ>& moments, std::size_t n, std::size_t shift = 0);

/// Bareiss elimination for a square matrix over Q(q)[z].
PolyZ bareiss_det(std::vector<std::vector<PolyZ>> m);

/// prod_{k=1}^{n-1} b_k^(n-k).
template <class K>
K product_formula(const Recurrence<K>& rec, long n) {
  K r(1);
  for (long k = 1; k < n; ++k) r *= rec.b(k).pow(n - k);
  return r;
}

/// q_0 .. q_{count-1} with q_0 = 1, q_1 = -a_0, q_{n+1} = -a_n q_n - b_n q_{n-1}.
template <class K>
std::vector<K> qn_sequence(const Recurrence<K>& rec, std::size_t count) {
  std::vector<K> out;
  if (count == 0) return out;
  out.emplace_back(1);
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const long ln = static_cast<long>(n);
    K next = -(rec.a(ln) * out[n]);
    if (n > 0) next -= rec.b(ln) * out[n - 1];
    out.push_back(std::move(next));
  }
  return out;
}

/// q_n * prod_{k=1}^{n-1} b_k^(n-k): the determinant with shift 1.
template <class K>
K shifted_det_formula(const Recurrence<K>& rec, long n) {
  return qn_sequence(rec, static_cast<std::size_t>(n) + 1).back() * product_formula(rec, n);
}

/// Closed-form Hankel determinant of beta_{i+j+k}, k in {0,1,2,3};
/// throws std::invalid_argument for any other k.
FieldQ closed_form_shift(long k, long n);

/// Closed-form Hankel determinant of the big q-Legendre moments.
FieldQZ closed_form_z(long n);

/// Closed-form determinant of (Psi(x^(i+j) * general_weight(P)))_{i,j<n}.
FieldQ general_det_closed_form(const GeneralParams& p, long n);
/// The same determinant computed directly.
FieldQ general_moment_matrix_det(const GeneralParams& p, long n);

/// Closed forms of p_n(0) for the q-Hahn families with (c,d) = (0,0), (0,1),
/// (1,1) (selected by k = 0, 1, 2). They satisfy
/// det_n(shift k+1) = det_n(shift k) (-1)^n p_n(0).
FieldQ hahn_pn_at_zero_closed(long k, long n);

}  // namespace qbern
