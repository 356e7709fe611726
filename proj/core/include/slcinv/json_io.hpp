#pragma once

// JSON (de)serialization of gluing data, presentations, invariant reports and
// four-lines orbit records. Output objects have sorted keys and a fixed
// indentation, so identical values give byte-identical text.

#include <string>
#include <string_view>
#include <vector>

#include "slcinv/fourlines.hpp"
#include "slcinv/gluing.hpp"
#include "slcinv/invariants.hpp"
#include "slcinv/words.hpp"

namespace slcinv {

// Throws Error(ParseError) with "line L, column C" for malformed JSON and
// Error(SchemaError / MissingField) for well-formed JSON of the wrong shape.
GluingData parse_gluing_json(std::string_view text);
std::string gluing_to_json(const GluingData& g);

GroupPresentation parse_presentation_json(std::string_view text);
std::string presentation_to_json(const GroupPresentation& p);

std::string report_to_json(const InvariantReport& r);
InvariantReport parse_report_json(std::string_view text);

std::string orbits_to_json(const std::vector<fourlines::OrbitRecord>& records);
std::vector<fourlines::OrbitRecord> parse_orbits_json(std::string_view text);

}  // namespace slcinv
