#pragma once

// JSON forms used by the command-line tool. Integers are always emitted as
// decimal strings so coefficients past 64 bits survive any JSON reader.

#include <json.hpp>

#include "gfp/congruence.hpp"
#include "gfp/frobenius.hpp"
#include "gfp/qseries.hpp"

namespace gfp {

using Json = nlohmann::ordered_json;

/// ["1","2","3",...]
Json series_to_json(const IntSeries& s);
IntSeries series_from_json(const Json& j);

/// {"top": [[value,color?],...], "bottom": [...]}; color omitted for uncolored parts.
Json array_to_json(const FrobeniusArray& a);

/// {"A":5,"B":4,"M":5,"verified_up_to":204,"status":"verified","subsumed":false}
/// plus "first_counterexample" for violated claims.
Json claim_to_json(const CongruenceClaim& c);

}  // namespace gfp
