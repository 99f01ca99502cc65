#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "factorforge/group.hpp"

namespace factorforge {

/// One line of a JSON-lines catalog.
struct CatalogRecord {
  std::string id;
  std::string name;
  nlohmann::json construction;
  int expected_order = 0;
  std::vector<std::string> tags;
  /// Named subgroups as generating elements (labels, cycles or words).
  std::map<std::string, std::vector<std::string>> subgroups;
  int line = 0;

  bool has_tag(std::string_view tag) const;
};

class Catalog {
 public:
  Catalog() = default;

  /// Throws ParseError (with line and column) or a duplicate-id ParseError.
  static Catalog parse(std::string_view text, const std::string& source = "<catalog>");
  static Catalog load(const std::string& path);
  /// The registry compiled into the library.
  static const Catalog& bundled();

  const std::vector<CatalogRecord>& records() const { return records_; }
  const CatalogRecord* find(std::string_view id) const;

  /// Builds a record, resolving id references within this catalog.
  /// Throws OrderMismatch, UnknownName (dangling or cyclic reference).
  GroupTable build(const CatalogRecord& record, int cap = kDefaultOrderCap) const;
  GroupTable build(std::string_view id, int cap = kDefaultOrderCap) const;

 private:
  GroupTable build_record(const CatalogRecord& record, std::vector<std::string>& stack, int cap) const;
  GroupTable build_construction(const nlohmann::json& c, std::vector<std::string>& stack, int cap) const;

  std::string source_;
  std::vector<CatalogRecord> records_;
};

std::vector<CatalogRecord> load_catalog(const std::string& path);

/// Registry ids, plus the families Cn, Sn / An (n <= 6), Dn (order 2n)
/// and G(q) for q = 2..32. Throws UnknownName.
GroupTable named_group(std::string_view name, int cap = kDefaultOrderCap);

/// Resolves "sylow:p", "gen:x,y,..." (elements by index, label, cycles or
/// word) and "named:X" (a named subgroup of `record`). Throws ParseError,
/// UnknownName, NotPrimeDivisor.
ElementSet resolve_subgroup_spec(const GroupTable& g, std::string_view spec, const CatalogRecord* record = nullptr);

/// The subgroup generated by the record's named generators.
ElementSet named_subgroup(const GroupTable& g, const CatalogRecord& record, std::string_view name);

/// Bundled group-ring identity files, keyed by file stem.
const std::map<std::string, std::string>& bundled_identities();

}  // namespace factorforge
