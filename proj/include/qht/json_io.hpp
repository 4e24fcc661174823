#pragma once

#include "qht/algebra.hpp"
#include "qht/decompose.hpp"
#include "qht/filtered.hpp"

#include "json.hpp"

namespace qht {

using Json = nlohmann::json;

Json to_json(const Rational& x);
Json to_json(const CycRat& x);
Json to_json(const Novikov& x);
Json to_json(const QuantumAlgebra& a, const Element& x);
Json to_json(const Polynomial& p, std::string_view variable);

Rational rational_from_json(const Json& j);
/// {"m", "coeffs"}; lifted into Q(zeta_m) when its own order divides m.
CycRat cycrat_from_json(const Json& j, int m);
/// Either the object form {"direction", "terms", "trunc"} or an expression string such as "2*t^-1".
Novikov scalar_from_json(const Json& j, const CoefficientField& field);
/// Either a list of {"basis", "scalar"} components or an expression string.
Element element_from_json(const Json& j, const QuantumAlgebra& a);

Json to_json(const CoefficientField& field);
CoefficientField field_from_json(const Json& j);

/// {"field", "generators": [{"orbit_id", "action", "index"}], "differential": [{"from", "to", "scalar"}]}.
Json to_json(const FilteredComplex& c);
FilteredComplex complex_from_json(const Json& j);
Json chain_to_json(const FilteredComplex& c, const Chain& z);
/// Either a list of {"generator", "scalar"} components or an expression over orbit ids.
Chain chain_from_json(const Json& j, const FilteredComplex& c);

}  // namespace qht
