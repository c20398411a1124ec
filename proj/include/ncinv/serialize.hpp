#pragma once

#include <json.hpp>

#include "ncinv/formulas.hpp"
#include "ncinv/gendeg.hpp"

namespace ncinv {

using Json = nlohmann::ordered_json;

/// {"n": N, "coeffs": ["p/q", ...]}
Json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const Json& j);

/// {"kind": "skew"|"downup", "alpha": "p/q", "beta": "p/q", "n": N};
/// alpha and beta are omitted for skew.
Json to_json(const AlgebraSpec& s);
AlgebraSpec spec_from_json(const Json& j);

/// {"spec": {...}, "terms": [{"monomial": [a,b] | [a,b,c], "coeff": {...}}]}
Json to_json(const NcPolynomial& p);
NcPolynomial polynomial_from_json(const Json& j);

/// {"algebra": {...}, "n": N, "degrees": [{"degree", "inv_dim", "product_dim", "new_gens"}],
///  "beta": B, "exhausted": bool}
Json to_json(const GenerationReport& r);
GenerationReport generation_report_from_json(const Json& j);

/// {"target", "n", "checked", "failures": [{"tuple", "closed_form", "engine"}]}
/// plus "rank" and "dimension" for kernel targets.
Json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const Json& j);

}  // namespace ncinv
