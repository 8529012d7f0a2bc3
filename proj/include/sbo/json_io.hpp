#pragma once

#include <json.hpp>

#include "sbo/juhl.hpp"
#include "sbo/poly.hpp"
#include "sbo/rankin_cohen.hpp"

namespace sbo {

// All public JSON preserves insertion order so identical inputs render
// byte-identical output.
using Json = nlohmann::ordered_json;

// {"vars": [...], "terms": [{"coeff": "p/q", "exps": [...]}, ...]} with terms
// in lexicographic exponent order; a "params" array is added when any
// coefficient carries formal parameters.
Json space_poly_to_json(const SpacePoly& p);
SpacePoly space_poly_from_json(const Json& j);

Json param_poly_to_json(const ParamPoly& p);

// {"a": a, "coeffs": ["...", ...]}; adds "params" when symbolic.
Json bidiffop_to_json(const BiDiffOp& op);
BiDiffOp bidiffop_from_json(const Json& j);

// {"n": n, "lambda": "p/q", "nu": "p/q",
//  "terms": [{"coeff": "p/q", "orders": [...]}], "restrict": "x_n=0"}.
Json juhlop_to_json(const JuhlOp& op);
JuhlOp juhlop_from_json(const Json& j);

}  // namespace sbo
