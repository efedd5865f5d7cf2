#include "gtv/exactfield/json_io.hpp"

#include "gtv/error.hpp"

namespace gtv {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const Interval& iv) { return json::array({to_json(iv.lo), to_json(iv.hi)}); }

json to_json(const NumberFieldElement& a) {
  json coords = json::array();
  for (const auto& c : a.coords()) coords.push_back(to_json(c));
  return {{"modulus", to_json(a.field()->modulus())}, {"coords", coords}};
}

json to_json(const TowerElement& t) { return {{"even", to_json(t.even())}, {"odd", to_json(t.odd())}}; }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw PreconditionError("rational must be a \"p/q\" string or an integer");
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("polynomial must be a coefficient array");
  std::vector<Rational> cs;
  for (const auto& c : j) cs.push_back(rational_from_json(c));
  return Polynomial(std::move(cs));
}

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw PreconditionError("interval must be [lo, hi]");
  return Interval(rational_from_json(j[0]), rational_from_json(j[1]));
}

namespace {

std::vector<Rational> coords_from_json(const json& j) {
  if (!j.contains("coords") || !j["coords"].is_array()) throw PreconditionError("element needs a coords array");
  std::vector<Rational> cs;
  for (const auto& c : j["coords"]) cs.push_back(rational_from_json(c));
  return cs;
}

}  // namespace

NumberFieldElement element_from_json(const json& j, bool assume_irreducible) {
  if (!j.contains("modulus")) throw PreconditionError("element needs a modulus");
  FieldPtr field = NumberField::create(polynomial_from_json(j["modulus"]), assume_irreducible);
  return NumberFieldElement(field, coords_from_json(j));
}

NumberFieldElement element_from_json(const json& j, const FieldPtr& field) {
  if (!j.contains("modulus")) throw PreconditionError("element needs a modulus");
  if (polynomial_from_json(j["modulus"]) != field->modulus()) throw FieldMismatch("serialized modulus differs");
  return NumberFieldElement(field, coords_from_json(j));
}

}  // namespace gtv
