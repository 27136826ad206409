#pragma once

// Internal helpers shared by the JSON readers/writers.

#include "gwis/scalar.hpp"
#include "gwis/term.hpp"

#include <json.hpp>

#include <string>

namespace gwis::detail {

using ojson = nlohmann::ordered_json;

/// {"const": "p/q", "unknowns": {"k": "p/q"}}; "const" may be omitted.
/// Throws std::invalid_argument describing the first schema violation.
Scalar scalar_from_json(const nlohmann::json& j);
ojson scalar_to_json(const Scalar& s);

ojson term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

/// Label from its spelling; throws std::invalid_argument on a bad identifier.
Label label_from_spelling(const std::string& s);
bool is_identifier(const std::string& s);

}  // namespace gwis::detail
