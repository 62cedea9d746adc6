#pragma once

// JSON serialization of computed values and the text rendering of report
// batches.  Every cardinality is emitted as a {"prime": exponent} object so
// downstream tooling never parses free-form strings.

#include <string>

#include <nlohmann/json.hpp>

#include "euchar/types.hpp"

namespace euchar {

using ordered_json = nlohmann::ordered_json;

ordered_json cardinality_json(const FormalCardinality& c);
ordered_json value_or_bound_json(const ValueOrBound& v);

// Human-readable rendering of a batch (array of per-scenario reports); the
// text is a formatting of the JSON and carries no extra state.
std::string render_text(const ordered_json& batch);

}  // namespace euchar
