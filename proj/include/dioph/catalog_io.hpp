#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dioph/claims.hpp"
#include "dioph/search.hpp"

namespace dioph {

inline constexpr const char* kToolName = "dioph";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  SearchConfig config;
  std::string started;   // ISO-8601 UTC
  std::string finished;  // ISO-8601 UTC
  std::uint64_t visited = 0;
  std::string digest;  // hex SHA-256 of the compact entries array
  bool complete = true;
};

struct Catalog {
  RunManifest manifest;
  std::vector<CatalogEntry> entries;
};

std::string utc_timestamp();

nlohmann::ordered_json to_json(const SearchConfig& c);
SearchConfig config_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const CatalogEntry& e);
// The class detail is not stored; it is recomputed from the distances and
// must agree with the stored class name (std::runtime_error otherwise).
CatalogEntry entry_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json entries_json(const std::vector<CatalogEntry>& entries);

// Hex SHA-256 of entries_json(entries).dump().
std::string catalog_digest(const std::vector<CatalogEntry>& entries);

nlohmann::ordered_json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Catalog& c);
Catalog catalog_from_json(const nlohmann::ordered_json& j);

// One header row, then one row per entry. Coordinates are joined by ';'
// inside a single column; k_roles are written as "k:role" joined by ';'.
std::string to_csv(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> entries_from_csv(const std::string& text);

nlohmann::ordered_json to_json(const PointSetRecord& r);
nlohmann::ordered_json to_json(const ClaimReport& r);
std::string to_text(const ClaimReport& r);

// Checkpoint = manifest (digest of the entries so far) + completed
// partition prefix + entries.
struct Checkpoint {
  RunManifest manifest;
  std::size_t partitions_done = 0;
  std::size_t partitions_total = 0;
  std::vector<CatalogEntry> entries;
};

nlohmann::ordered_json to_json(const Checkpoint& c);

// Throws std::runtime_error when the stored digest does not match the
// stored entries.
Checkpoint checkpoint_from_json(const nlohmann::ordered_json& j);

}  // namespace dioph
