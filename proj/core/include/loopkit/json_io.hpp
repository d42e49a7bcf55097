#pragma once

#include <string>
#include <string_view>

#include "loopkit/tau_poly.hpp"

namespace loopkit {

/// {"coeffs":["c0","c1",...],"var":"tau"} with coefficients as decimal
/// strings in ascending powers; the zero polynomial has an empty list.
std::string tau_poly_to_json(const TauPoly& p);

/// Inverse of tau_poly_to_json; throws ValidationError on malformed input.
TauPoly tau_poly_from_json(std::string_view text);

}  // namespace loopkit
