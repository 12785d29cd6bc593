/* JSON (de)serialization for polynomials and model files.  Integers are
   decimal strings so round-trips are bit-exact at any size. */

#pragma once

#include <string>

#include <json.hpp>

#include "malle/bipoly.hpp"

namespace malle {

// {"coeffs": [[...]], "var_order": "T,Y"}; coeffs[i][j] multiplies T^i Y^j.
nlohmann::json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

nlohmann::json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

nlohmann::json rat_to_json(const Rat& r);  // "num/den" or plain integer string
Rat rat_from_json(const nlohmann::json& j);

}  // namespace malle
