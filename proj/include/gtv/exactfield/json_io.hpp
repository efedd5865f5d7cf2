#pragma once

#include <json.hpp>

#include "gtv/exactfield/interval.hpp"
#include "gtv/exactfield/number_field.hpp"
#include "gtv/exactfield/polynomial.hpp"
#include "gtv/exactfield/tower.hpp"

namespace gtv {

using json = nlohmann::json;

// Rationals serialize as "p/q" strings; polynomials as coefficient arrays
// (lowest degree first); intervals as [lo, hi].
json to_json(const Rational& r);
json to_json(const Polynomial& p);
json to_json(const Interval& iv);
// {"modulus": [c0, ..., cn], "coords": [a0, ..., a_{n-1}]}
json to_json(const NumberFieldElement& a);
// {"even": <element>, "odd": <element>}
json to_json(const TowerElement& t);

Rational rational_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
Interval interval_from_json(const json& j);
// Builds (and validates) the field from "modulus".
NumberFieldElement element_from_json(const json& j, bool assume_irreducible = false);
// Reuses `field`; throws FieldMismatch when "modulus" differs from it.
NumberFieldElement element_from_json(const json& j, const FieldPtr& field);

}  // namespace gtv
