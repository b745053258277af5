#pragma once

// Dense univariate polynomials over the integers. This is the computational
// kernel behind FieldQ: every rational function of q is stored as a rational
// scale times a quotient of two primitive integer polynomials.

#include <gmpxx.h>

#include <vector>

namespace qbern::zpoly {

/// Coefficients in ascending degree; no trailing zeros; empty means zero.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p);
int degree(const ZPoly& p);
bool is_one(const ZPoly& p);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// a*sa + b*sb, trimmed.
ZPoly linear_combination(const ZPoly& a, const mpz_class& sa, const ZPoly& b,
                         const mpz_class& sb);
void negate(ZPoly& p);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const ZPoly& p);
/// Divides out the content and makes the leading coefficient positive.
/// Returns the signed factor removed, so that p == factor * result.
mpz_class make_primitive(ZPoly& p);

/// If b divides a in Z[x], stores the quotient and returns true.
bool divides(const ZPoly& a, const ZPoly& b, ZPoly* quotient);
/// Exact quotient; the caller guarantees divisibility.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

/// Greatest common divisor of two nonzero polynomials, primitive with
/// positive leading coefficient. Uses a modular algorithm with trial
/// division, so the result is always exact.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Reference gcd by primitive pseudo-remainder sequences. Slow, used as a
/// fallback and as a test oracle.
ZPoly gcd_prs(const ZPoly& a, const ZPoly& b);

}  // namespace qbern::zpoly
