#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "parallax/types.hpp"

namespace parallax {

// Matrix wire format:
//   {"rows": r, "cols": c, "data": [[re, im], ...]}
// with data row-major and exactly r*c entries. Serialization uses
// shortest-round-trip doubles, so parse(serialize(a)) == a bit for bit.
nlohmann::json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const nlohmann::json& j);  // throws ParseError

ComplexMatrix load_matrix(const std::string& path);  // throws ParseError
void save_matrix(const std::string& path, const ComplexMatrix& a);

}  // namespace parallax
