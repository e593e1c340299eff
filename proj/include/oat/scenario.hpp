#pragma once

#include <string>

#include "json.hpp"

#include "oat/report.hpp"

namespace oat {

using Json = nlohmann::json;

// Parses and executes a scenario document: named groups, algebras, bundles,
// bimodules and involutions, followed by an ordered task list.  Throws
// ParseError / UnresolvedReference on malformed input; check failures are
// report entries, not exceptions.
Report run_scenario_json(const Json& doc, double tol_override);
Report run_scenario_file(const std::string& path, double tol_override);

// Serializes a report: records sorted by id, no timestamps, so identical
// runs produce identical bytes.
Json report_to_json(const Report& rep, double tol);
std::string report_text(const Report& rep, const std::string& check_filter);

// Drops records whose id does not start with the prefix.
Report filter_report(const Report& rep, const std::string& prefix);

}  // namespace oat
