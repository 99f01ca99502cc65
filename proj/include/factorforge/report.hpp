#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "factorforge/catalog.hpp"
#include "factorforge/search.hpp"

namespace factorforge {

struct WitnessDigest {
  std::string shape;
  std::string digest;
};

/// One classified group.
struct ReportEntry {
  std::string id;
  int order = 0;
  bool supersolvable = false;
  std::string multifold;      // "yes", "no" or "undecided"
  std::string failing_shape;  // empty unless multifold == "no"
  std::string failing_proof;  // "search" or "2m2-cover"
  std::vector<WitnessDigest> witnesses;
  std::uint64_t nodes = 0;
  long long millis = 0;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(std::string_view name);

/// Entries sorted by order, then id.
std::string emit_report(std::vector<ReportEntry> entries, ReportFormat format);
nlohmann::json report_json(std::vector<ReportEntry> entries);
/// Reads back the CSV columns (witnesses are not part of the CSV).
std::vector<ReportEntry> parse_csv_report(std::string_view text);

ReportEntry classify_group(const std::string& id, const GroupTable& g, const SearchOptions& opts);

/// Classifies every record of order <= max_order, `jobs` groups at a time.
/// Per-group searches run single-threaded, so entries do not depend on jobs.
std::vector<ReportEntry> classify(const Catalog& catalog, int max_order, int jobs, const SearchOptions& opts);

nlohmann::json stats_json(const SearchStats& s);

}  // namespace factorforge
