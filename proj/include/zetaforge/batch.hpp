#pragma once

// Manifest-driven verification battery. A manifest holds one "<n> <expr>"
// entry per line; blank lines and lines starting with '#' are skipped.

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetaforge/zetarep.hpp"

namespace zetaforge {

struct ManifestEntry {
  std::size_t line = 0;
  long n = -1;
  std::string expr;
};

/// Throws SyntaxError naming the offending line.
std::vector<ManifestEntry> parse_manifest(std::istream& in);
std::vector<ManifestEntry> load_manifest(const std::string& path);

struct BatchOptions {
  long series_order = 10;
  long precision = kDefaultPrecision;
  /// l-adic checks run for every prime l <= ell_bound other than p.
  long ell_bound = 50;
};

/// Every applicable check for one entry. Never throws: errors become a
/// failed entry carrying the error code.
nlohmann::json run_entry(const ManifestEntry& entry, const BatchOptions& options);

/// {"entries": [...], "summary": {...}, "verdict": "pass" | "fail"}, entries in
/// manifest order. The two runners produce identical reports.
nlohmann::json run_battery_serial(const std::vector<ManifestEntry>& entries, const BatchOptions& options);
nlohmann::json run_battery_parallel(const std::vector<ManifestEntry>& entries, const BatchOptions& options);

}  // namespace zetaforge
