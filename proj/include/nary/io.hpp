#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "nary/classify.hpp"
#include "nary/derived.hpp"
#include "nary/frobenius.hpp"
#include "nary/hodge.hpp"

// JSON schemas "nary/1". Generator indices are 1-based, scalars are exact
// "p/q" strings. Parse failures throw Error(ParseError) naming the JSON
// pointer of the offending field.
namespace nary::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "nary/1";

Scalar scalar_from_json(const json& j, const std::string& path);
json scalar_to_json(const Scalar& s);

// {"dim", "parity"?, "gram"?}; parity defaults to odd, gram to the identity.
// max_degree 0 keeps the default cap.
SpacePtr superspace_from_json(const json& j, const std::string& path, std::size_t max_degree = 0);
json superspace_to_json(const Superspace& space);

// [{"monomial": [i, ...], "coeff": "p/q"}, ...]; indices ascending.
Element element_from_json(const json& j, const SpacePtr& space, const std::string& path);
json element_to_json(const Element& e);

Matrix matrix_from_json(const json& j, const std::string& path);
json matrix_to_json(const Matrix& m);

// {"arity": n, "element": [...]} or {"linf": [layer_0, layer_1, ...]}.
Potential potential_from_json(const json& j, const SpacePtr& space, const std::string& path);
json potential_to_json(const Potential& p);

// {"arity": n, "expand": "commutative"|"none", "constants": [{"args": [...],
// "value": element}]}. "commutative" fills the other orderings by the Koszul
// sign rule; the default stores exactly the listed tuples.
NaryStructure structure_from_json(const json& j, const SpacePtr& space, const std::string& path);
json structure_to_json(const NaryStructure& s);

json tuple_to_json(const Tuple& t);
json report_to_json(const Report& r);
json l_infinity_to_json(const LInfinityReport& r);
json hodge_to_json(const HodgeReport& r);
json canonical_to_json(const CanonicalForm& c);
json ideal_to_json(const IdealReport& r);
json classify_to_json(const ClassifyRecord& r);
json certificate_to_json(const QFCertificate& c, const std::optional<GraphResult>& g);

}  // namespace nary::io
