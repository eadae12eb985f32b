#pragma once

#include <string>
#include <vector>

#include "qident/registry.hpp"

namespace qident::registry {

/// What a verification run was asked to do; echoed into reports.
struct RunSummary {
  Limits limits;
  unsigned jobs = 1;
  std::vector<std::string> ids;  // empty means all
};

/// {engine_version, config, results: [{id, params, pass, first_mismatch, millis}]}.
/// Coefficients are decimal strings; errored tasks carry an extra "error".
std::string report_json(const Report& report, const RunSummary& run);
std::string report_csv(const Report& report);
std::string report_text(const Report& report);

/// The catalog as a JSON array of {id, kind, paper_ref, quote, display,
/// provenance_note, ranges}.
std::string catalog_json(const Limits& limits);
std::string catalog_csv(const Limits& limits);
std::string catalog_text(const Limits& limits);

}  // namespace qident::registry
