#include "qbern/render.hpp"

#include <stdexcept>

namespace qbern {

namespace {

bool single_term(const zpoly::ZPoly& p) {
  int nonzero = 0;
  for (const auto& c : p) nonzero += sgn(c) != 0;
  return nonzero <= 1;
}

std::string wrap(const std::string& s, bool needs) { return needs ? "(" + s + ")" : s; }

zpoly::ZPoly scaled(const zpoly::ZPoly& p, const mpz_class& s) {
  zpoly::ZPoly r = p;
  for (auto& c : r) c *= s;
  return r;
}

std::string monomial(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

Json coefficient_json(const mpq_class& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
    static_assert(sizeof(long) == 8);
    return c.get_num().get_si();
  }
  return c.get_str();
}

}  // namespace

std::string to_text(const mpq_class& v) { return v.get_str(); }

std::string to_text(const zpoly::ZPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const mpz_class& c = p[k];
    if (sgn(c) == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial(var, k);
    } else {
      out += mag.get_str() + "*" + monomial(var, k);
    }
  }
  return out;
}

std::string to_text(const FieldQ& v) {
  if (v.is_zero()) return "0";
  const zpoly::ZPoly num = scaled(v.primitive_numerator(), v.scale().get_num());
  const zpoly::ZPoly den = scaled(v.primitive_denominator(), v.scale().get_den());
  if (zpoly::is_one(den)) return to_text(num);
  return wrap(to_text(num), !single_term(num)) + " / " + wrap(to_text(den), !single_term(den));
}

std::string to_text(const PolyZ& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const FieldQ& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) out += " + ";
    first = false;
    const std::string text = to_text(c);
    const bool simple = c.is_polynomial() && single_term(c.primitive_numerator()) && text[0] != '-';
    if (k == 0) {
      out += wrap(text, !simple);
    } else if (c == FieldQ(1)) {
      out += monomial(var, k);
    } else {
      out += wrap(text, !simple) + "*" + monomial(var, k);
    }
  }
  return out;
}

std::string to_text(const FieldQZ& v) {
  if (v.is_zero()) return "0";
  if (v.is_polynomial()) return to_text(v.numerator());
  return "(" + to_text(v.numerator()) + ") / (" + to_text(v.denominator()) + ")";
}

Json to_json(const mpq_class& v) { return coefficient_json(v); }

Json to_json(const FieldQ& v) {
  Json num = Json::array();
  Json den = Json::array();
  if (v.is_zero()) {
    num.push_back(0);
    den.push_back(1);
  } else {
    const PolyQ n = v.numerator();
    const PolyQ d = v.denominator();
    for (const auto& c : n.coeffs()) num.push_back(coefficient_json(c));
    for (const auto& c : d.coeffs()) den.push_back(coefficient_json(c));
  }
  Json j;
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

Json to_json(const FieldQZ& v) {
  Json num = Json::array();
  Json den = Json::array();
  if (v.is_zero()) {
    num.push_back(to_json(FieldQ(0)));
    den.push_back(to_json(FieldQ(1)));
  } else {
    for (const auto& c : v.numerator().coeffs()) num.push_back(to_json(c));
    for (const auto& c : v.denominator().coeffs()) den.push_back(to_json(c));
  }
  Json j;
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    mpq_class r;
    if (r.set_str(j.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("malformed rational '" + j.get<std::string>() + "'");
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in rational");
    r.canonicalize();
    return r;
  }
  throw std::invalid_argument("rational coefficient must be an integer or a string");
}

FieldQ field_q_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_array() ||
      !j["den"].is_array()) {
    throw std::invalid_argument("expected {\"num\": [...], \"den\": [...]}");
  }
  std::vector<mpq_class> num, den;
  for (const auto& c : j["num"]) num.push_back(rational_from_json(c));
  for (const auto& c : j["den"]) den.push_back(rational_from_json(c));
  return FieldQ::from_polys(PolyQ(std::move(num)), PolyQ(std::move(den)));
}

}  // namespace qbern
