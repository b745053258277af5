#pragma once

// q-combinatorial building blocks. All values are exact elements of Q(q);
// polynomial-valued helpers return polynomials in x over Q(q).

#include "qbern/field_q.hpp"
#include "qbern/field_qz.hpp"

namespace qbern {

/// Polynomials in x over Q(q): arguments of the moment functional.
using PolyX = Poly<FieldQ>;

/// [n]_q = (q^n - 1)/(q - 1); negative n allowed.
FieldQ qint(long n);
/// [n]!_q; throws std::invalid_argument for n < 0.
FieldQ qfact(long n);
/// Gaussian binomial; throws std::invalid_argument unless 0 <= m <= n.
FieldQ qbinom(long n, long m);

/// The symbol (q^m; q)_k for an integer exponent m.
struct QPochSpec {
  long base_exponent = 0;
  long length = 0;
};

/// prod_{i<k} (1 - q^(m+i)).
FieldQ qpoch(QPochSpec spec);
inline FieldQ qpoch(long base_exponent, long length) { return qpoch({base_exponent, length}); }

/// (q^a (1 + (q-1) x); q)_k as a degree-k polynomial in x.
PolyX qpoch_linear(long k, long a_shift);

/// q-analogue of the binomial polynomial binom(i + x, d):
/// (1/[d]!) prod_{t=i-d+1}^{i} ([t]_q + q^t x).
PolyX qbase(long i, long d);

/// Asc(x, a) = prod_{i=1}^{a} ([i]_q + q^i x).
PolyX asc(long a);
/// Desc(x, a) = prod_{i=1}^{a} ([i]_q - x).
PolyX desc(long a);

/// sum_{k=0}^{n} (q^-n; q)_k (q^top; q)_k q^k / ((q; q)_k (q^bottom; q)_k).
/// Throws DivisionByZero if some (q^bottom; q)_k vanishes.
FieldQ phi21_terminating(long n, long top_exp, long bottom_exp);

/// Ordinary binomial coefficient as a rational.
mpq_class binomial(long n, long k);

}  // namespace qbern
