#pragma once

// JSON forms of the library's values. Big integers are decimal strings and
// rationals are "num/den" strings so no consumer loses precision.

#include <json.hpp>

#include "smult/exactmath.hpp"
#include "smult/identities.hpp"
#include "smult/multiplicity.hpp"
#include "smult/staircase.hpp"

namespace smult {

/// {"coeffs": ["num/den", ...]}, lowest degree first.
nlohmann::json to_json(const ExactPolynomial& poly);
/// Throws std::invalid_argument on a malformed document.
ExactPolynomial polynomial_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const staircase::TupleProfile& t);
nlohmann::json to_json(const staircase::ExponentMatrix& e);
/// Accepts an array of equal-length integer arrays.
staircase::ExponentMatrix matrix_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const identities::ChainCode& code);
nlohmann::json to_json(const identities::IdentityResult& result);
nlohmann::json to_json(const multiplicity::MultiplicityResult& result);
nlohmann::json to_json(const multiplicity::NonPolynomialReport& report);

}  // namespace smult
