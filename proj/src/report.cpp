#include "census/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "census/common.hpp"
#include "census/parallel.hpp"
#include "census/polygon.hpp"

namespace census {

namespace {

std::string join_plus(const std::vector<int>& v) {
  std::string s;
  for (int x : v) {
    if (!s.empty()) s += '+';
    s += std::to_string(x);
  }
  return s;
}

std::string pairing_text(const EdgePairing& p) {
  std::string s;
  for (auto [a, b] : p.sorted_pairs()) {
    if (!s.empty()) s += '|';
    s += std::to_string(a + 1) + '-' + std::to_string(b + 1);
  }
  return s;
}

nlohmann::json record_to_json(const ClassRecord& r) {
  return nlohmann::json{{"id", r.id},
                        {"orbit", r.orbit_size},
                        {"boundary", r.boundary.genera()},
                        {"edge_orbits", r.edge_orbit_sizes},
                        {"h1", {{"rank", r.h1.rank}, {"torsion", r.h1.torsion}}}};
}

ClassRecord record_from_json(const nlohmann::json& j) {
  ClassRecord r;
  r.id = j.at("id").get<std::string>();
  r.orbit_size = j.at("orbit").get<int>();
  r.boundary = make_signature(j.at("boundary").get<std::vector<int>>());
  r.edge_orbit_sizes = j.at("edge_orbits").get<std::vector<int>>();
  r.h1.rank = j.at("h1").at("rank").get<int>();
  r.h1.torsion = j.at("h1").at("torsion").get<std::vector<std::int64_t>>();
  return r;
}

constexpr char kReportSchema[] = "census-report/1";
constexpr char kCacheSchema[] = "census-cache/1";

}  // namespace

std::vector<ClassRecord> compute_class_records(unsigned jobs) {
  const OctaCensus census = octa_census(jobs);
  auto records = parallel_map<ClassRecord>(
      census.class_reps.size(), jobs, [&](std::size_t i) {
        const GluingPattern& rep = census.class_reps[i];
        ClassRecord r;
        r.id = rep.id();
        r.orbit_size = census.orbit_sizes[i];
        r.boundary = boundary_signature(rep);
        for (const auto& orbit : edge_orbits(rep))
          r.edge_orbit_sizes.push_back(static_cast<int>(orbit.edges.size()));
        std::sort(r.edge_orbit_sizes.rbegin(), r.edge_orbit_sizes.rend());
        r.h1 = first_homology(rep);
        return r;
      });
  return records;
}

CensusReport polygon_report(int k, bool list_classes) {
  const PolygonCensus census = polygon_census(k);
  CensusReport report;
  if (list_classes) {
    report.kind = "polygon-classes";
    for (std::size_t i = 0; i < census.class_reps.size(); ++i)
      report.rows.push_back(nlohmann::json{{"pairing", pairing_text(census.class_reps[i])},
                                           {"genus", census.class_genus[i]}});
    report.total = census.classes;
  } else {
    report.kind = "polygon";
    report.rows.push_back(nlohmann::json{{"k", k},
                                         {"gluings", census.gluings},
                                         {"classes", census.classes},
                                         {"surfaces", census.surfaces}});
    report.total = census.classes;
  }
  return report;
}

CensusReport boundary_report(const std::vector<ClassRecord>& records) {
  std::map<std::vector<int>, int> rows;
  for (const auto& r : records) ++rows[r.boundary.genera()];
  CensusReport report;
  report.kind = "octahedron-boundary";
  for (const auto& [genera, count] : rows)
    report.rows.push_back(
        nlohmann::json{{"signature", signature_name(make_signature(genera))}, {"count", count}});
  report.total = records.size();
  return report;
}

CensusReport capped_report(const std::vector<ClassRecord>& records) {
  std::map<std::vector<int>, int> rows;
  for (const auto& r : records) ++rows[cap_spheres(r.boundary).genera()];
  CensusReport report;
  report.kind = "octahedron-capped";
  for (const auto& [genera, count] : rows)
    report.rows.push_back(
        nlohmann::json{{"signature", signature_name(make_signature(genera))}, {"count", count}});
  report.total = records.size();
  return report;
}

CensusReport homology_report(const std::vector<ClassRecord>& records) {
  std::map<std::tuple<std::vector<int>, int, std::vector<std::int64_t>>, int> rows;
  for (const auto& r : records)
    ++rows[{cap_spheres(r.boundary).genera(), r.h1.rank, r.h1.torsion}];
  CensusReport report;
  report.kind = "octahedron-homology";
  for (const auto& [key, count] : rows) {
    const auto& [genera, rank, torsion] = key;
    AbelianGroup h{rank, torsion};
    report.rows.push_back(nlohmann::json{{"capped", signature_name(make_signature(genera))},
                                         {"h1", h.str()},
                                         {"count", count}});
  }
  report.total = records.size();
  return report;
}

CensusReport classes_report(const std::vector<ClassRecord>& records) {
  CensusReport report;
  report.kind = "octahedron-classes";
  for (const auto& r : records)
    report.rows.push_back(nlohmann::json{{"id", r.id},
                                         {"orbit", r.orbit_size},
                                         {"boundary", signature_name(r.boundary)},
                                         {"capped", signature_name(cap_spheres(r.boundary))},
                                         {"edge_orbits", join_plus(r.edge_orbit_sizes)},
                                         {"h1", r.h1.str()}});
  report.total = records.size();
  return report;
}

std::string emit_json(const CensusReport& r) {
  nlohmann::json j{{"schema", kReportSchema},
                   {"tool", "census 1.0.0"},
                   {"kind", r.kind},
                   {"rows", r.rows},
                   {"total", r.total}};
  return j.dump(2) + "\n";
}

std::string emit_csv(const CensusReport& r) {
  static const std::map<std::string, std::vector<std::string>> columns = {
      {"polygon", {"k", "gluings", "classes", "surfaces"}},
      {"polygon-classes", {"pairing", "genus"}},
      {"octahedron-boundary", {"signature", "count"}},
      {"octahedron-capped", {"signature", "count"}},
      {"octahedron-homology", {"capped", "h1", "count"}},
      {"octahedron-classes", {"id", "orbit", "boundary", "capped", "edge_orbits", "h1"}},
  };
  const auto& cols = columns.at(r.kind);
  std::ostringstream out;
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out << ',';
      const auto& cell = row.at(cols[i]);
      if (cell.is_string())
        out << cell.get<std::string>();
      else
        out << cell.dump();
    }
    out << '\n';
  }
  return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string digest_of(const nlohmann::json& classes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(classes.dump())));
  return buf;
}

}  // namespace

void save_cache(const std::filesystem::path& path, const std::vector<ClassRecord>& records) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& r : records) classes.push_back(record_to_json(r));
  nlohmann::json j{{"schema", kCacheSchema}, {"digest", digest_of(classes)}, {"classes", classes}};

  auto tmp = path;
  tmp += ".tmp";
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::vector<ClassRecord>> load_cache(const std::filesystem::path& path,
                                                   std::string& note) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    note = "cache: " + path.string() + " not found";
    return std::nullopt;
  }
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("schema").get<std::string>() != kCacheSchema) {
      note = "cache: schema mismatch, recomputing";
      return std::nullopt;
    }
    const auto& classes = j.at("classes");
    if (j.at("digest").get<std::string>() != digest_of(classes)) {
      note = "cache: digest mismatch, recomputing";
      return std::nullopt;
    }
    std::vector<ClassRecord> records;
    records.reserve(classes.size());
    for (const auto& c : classes) records.push_back(record_from_json(c));
    note = "cache: loaded " + std::to_string(records.size()) + " classes from " + path.string();
    return records;
  } catch (const nlohmann::json::exception&) {
    note = "cache: unreadable content, recomputing";
    return std::nullopt;
  }
}

}  // namespace census
