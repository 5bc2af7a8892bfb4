#pragma once

#include <json.hpp>

#include "qvl/bigint.hpp"
#include "qvl/laurent.hpp"
#include "qvl/qrational.hpp"

namespace qvl {

/// Insertion-ordered JSON so identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// {"s_terms": [[exponent, "coeff"], ...]}, ascending by exponent,
/// coefficients as decimal strings (they outgrow any fixed width).
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"num": <poly>, "den": <poly>}.
Json to_json(const QRational& r);
QRational qrational_from_json(const Json& j);

/// {"p": "...", "q": "..."} with q positive.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

}  // namespace qvl
