#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "census/chain_complex.hpp"

namespace census {

// Everything the reports need about one gluing class; also the unit stored
// in the cache file.
struct ClassRecord {
  std::string id;  // canonical pattern encoding
  int orbit_size = 0;
  SurfaceSignature boundary;
  std::vector<int> edge_orbit_sizes;  // descending
  AbelianGroup h1;

  bool operator==(const ClassRecord&) const = default;
};

// Canonicalizes all 8505 patterns and computes per-class invariants.
std::vector<ClassRecord> compute_class_records(unsigned jobs = 1);

struct CensusReport {
  std::string kind;
  std::vector<nlohmann::json> rows;
  std::size_t total = 0;
};

CensusReport polygon_report(int k, bool list_classes);
CensusReport boundary_report(const std::vector<ClassRecord>& records);
CensusReport capped_report(const std::vector<ClassRecord>& records);
CensusReport homology_report(const std::vector<ClassRecord>& records);
CensusReport classes_report(const std::vector<ClassRecord>& records);

std::string emit_json(const CensusReport& r);
std::string emit_csv(const CensusReport& r);

std::uint64_t fnv1a64(std::string_view data);

// Versioned, digest-protected cache of the class records. Writes are atomic
// (temp file + rename); loads return nullopt with a human-readable note on
// any mismatch so callers can recompute.
void save_cache(const std::filesystem::path& path, const std::vector<ClassRecord>& records);
std::optional<std::vector<ClassRecord>> load_cache(const std::filesystem::path& path,
                                                   std::string& note);

}  // namespace census
