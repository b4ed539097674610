#pragma once

#include <json.hpp>

#include "hkgeom/configuration/configuration.hpp"
#include "hkgeom/exactmath/multipoly.hpp"
#include "hkgeom/exactmath/polymatrix.hpp"

namespace hkgeom::cli {

using Json = nlohmann::ordered_json;

// Rationals as "p/q" strings, cyclotomic scalars as {"order", "coeffs"}, F_p as {"p", "value"}.
Json to_json(const exact::Scalar& s);
// Accepts a rational string or integer, a cyclotomic coefficient array, or an {"order", "coeffs"} object.
exact::Scalar scalar_from_json(const Json& j, const exact::FieldSpec& field);

Json to_json(const exact::FieldSpec& f);
exact::FieldSpec field_from_json(const Json& j);

// List of {"exponents", "coefficient"} in descending graded-lex order.
Json to_json(const exact::MultiPoly& p);
Json to_json(const exact::PolyMatrix& m);
Json to_json(const config::Triple& t);

// {"field": ..., "lines": [[a0, a1, a2], ...]}
config::Configuration configuration_from_json(const Json& j);
Json configuration_to_json(const config::Configuration& cfg);

}  // namespace hkgeom::cli
