#pragma once

#include <json.hpp>

#include "ysym/algebra.hpp"
#include "ysym/certificate.hpp"
#include "ysym/corner_identities.hpp"
#include "ysym/sym_power.hpp"

namespace ysym {

using Json = nlohmann::ordered_json;

/// {"degree": n, "terms": [{"perm": [...], "coeff": "p/q"}, ...]}, terms sorted by word.
Json to_json(const AlgebraElement& f);
AlgebraElement algebra_from_json(const Json& j);

/// Same layout, plus "d".
Json to_json(const SymElement& f);

/// {"target", "k", "d", "scale", "summands": [{"left", "generator", "right"}]}.
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

/// {"shape", "subshape", "checks": [{"id", "pass", "instances", "residual"?}]}.
Json to_json(const CornerReport& report);

}  // namespace ysym
