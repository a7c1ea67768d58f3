#pragma once

#include <string>

#include "json.hpp"

#include "lapmult/classify.hpp"
#include "lapmult/enumerate.hpp"
#include "lapmult/graph.hpp"
#include "lapmult/spectrum.hpp"

namespace lapmult {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// All builders emit key-sorted objects (the json object type is ordered by
// key), so identical inputs serialize identically.
json spectrum_json(const ExactSpectrum& s);
json spectrum_report(const Graph& g);
json classification_json(const ClassificationReport& rep);
json catalog_entry_json(const CatalogEntry& e);
json catalog_json(int n, int k);
json summary_json(const EnumerationSummary& s);
json families_json();

// {"command", "input", "result", "timing_ms", "version"}
json envelope(const std::string& command, json input, json result, double timing_ms);

const char* predicate_name(MultiplicityPredicate pred);

}  // namespace lapmult
