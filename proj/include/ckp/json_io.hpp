#pragma once

#include <string>

#include <json.hpp>

#include "ckp/fock.hpp"
#include "ckp/operators.hpp"

namespace ckp {

using nlohmann::json;

/// FockVector wire format: [[coeff "p/q", [[doubled_index, mult], ...]], ...]
/// with terms in canonical monomial order.
json to_json(const FockVector& v);
FockVector fock_vector_from_json(const json& j);

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

/// TensorVector wire format: [[coeff, monomial, monomial], ...].
json to_json(const TensorVector& t);
TensorVector tensor_vector_from_json(const json& j);

/// Exact half-integer literals: "3", "9/2", "-13/2". Returns the doubled
/// value; rejects anything else.
long parse_half_integer(const std::string& s);
std::string format_half_integer(long doubled);

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace ckp
