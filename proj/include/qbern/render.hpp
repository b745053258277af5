#pragma once

// Text and JSON renderings of exact values.
//
// Text: "num / den" with integer coefficients in descending powers of q, for
// example "-1 / (q + 1)". JSON: {"num": [...], "den": [...]} ascending in
// degree, with the denominator monic over Q; coefficients that are integers
// fitting in 64 bits are JSON numbers, every other coefficient is a "p/q"
// (or big integer) string.

#include <gmpxx.h>

#include <string>

#include <json.hpp>

#include "qbern/field_q.hpp"
#include "qbern/field_qz.hpp"

namespace qbern {

/// Keys keep insertion order ("num" before "den").
using Json = nlohmann::ordered_json;

std::string to_text(const mpq_class& v);
/// An integer polynomial in `var`, descending.
std::string to_text(const zpoly::ZPoly& p, const std::string& var = "q");
std::string to_text(const FieldQ& v);
/// Polynomials in z with Q(q) coefficients, descending in z.
std::string to_text(const PolyZ& p, const std::string& var = "z");
std::string to_text(const FieldQZ& v);

Json to_json(const mpq_class& v);
Json to_json(const FieldQ& v);
/// {"num": [FieldQ...], "den": [FieldQ...]} ascending in z.
Json to_json(const FieldQZ& v);

/// Inverse of to_json; throws std::invalid_argument on malformed input.
mpq_class rational_from_json(const Json& j);
FieldQ field_q_from_json(const Json& j);

}  // namespace qbern
