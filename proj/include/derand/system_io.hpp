#pragma once

// JSON system files:
//   {"n": 2, "degrees": [2, 2],
//    "equations": [[{"exponents": [2,0,0], "re": 1.0, "im": 0.0}, ...], ...]}
// Omitted monomials are zero; a repeated exponent tuple within one equation is an error.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "derand/systems.hpp"

namespace derand {

PolySystem system_from_json(const nlohmann::json& doc);
PolySystem parse_system(const std::string& text);
PolySystem read_system_file(const std::filesystem::path& path);

/// Writes every monomial, zero coefficients included, in canonical order.
nlohmann::json system_to_json(const PolySystem& f);

}  // namespace derand
