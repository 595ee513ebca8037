#pragma once

// JSON encodings of library values. Integers that fit in 64 bits are JSON
// numbers; larger ones are decimal strings. Every encoder has a decoder that
// reconstructs the value exactly.

#include <json.hpp>

#include "bitwist/cfrac.hpp"
#include "bitwist/laurent.hpp"
#include "bitwist/matrix.hpp"
#include "bitwist/surgery.hpp"

namespace bitwist::cli {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// "a/b", "a" or "inf".
Json fraction_to_json(const ProjectiveFraction& x);
ProjectiveFraction fraction_from_json(const Json& j);

/// {"free_rank": r, "torsion": [d1, ...]}
Json abelian_to_json(const AbelianInvariants& g);
AbelianInvariants abelian_from_json(const Json& j);

/// {"exponent": coefficient, ...} keyed by decimal exponent.
Json polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);

Json multipliers_to_json(const MultiplierFunction& mf);
MultiplierFunction multipliers_from_json(const Json& j);

Json trace_to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const Json& j);

}  // namespace bitwist::cli
