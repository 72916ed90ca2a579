#ifndef GELFAND_IO_HPP
#define GELFAND_IO_HPP

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "gelfand/spherical.hpp"
#include "gelfand/transform.hpp"

namespace gelfand {

using json = nlohmann::json;

// Polynomial spec: { "n": int, "terms": [ { "exp": [int,...], "coeff": ... } ] }
// with terms in canonical order.  Coefficients: exact fraction string "p/q"
// (rational mode), [re, im] numbers (complex mode), or ["p/q", "r/s"]
// (exact Gaussian-rational mode used by coefficient tables).
json poly_to_json(const PolyQ& p);
json poly_to_json(const PolyG& p);
json poly_to_json(const PolyC& p);
PolyQ poly_rat_from_json(const json& j);

// Group spec: { "n": int, "kind": "finite"|"so2"|"so3",
//               "matrices": [[["p/q",...],...],...]?,
//               "quadrature_points": int?, "resolution": int?, "rule": string? }
json group_to_json(const CompactGroup& g);
CompactGroup group_from_json(const json& j);

/// Parsed pair spec file: validated pair plus optional pipeline defaults.
struct PairSpec {
  GelfandPair pair;
  std::optional<long> max_degree;
  std::optional<double> quad_radius;
  std::optional<int> quad_nodes;
  std::optional<double> tol;
};

// Pair spec file: { "version": 1, "name"?: string, "group": {...},
//                   "generators": [ {...}, ... ], "defaults"?: {...} }.
// Unknown keys anywhere are rejected.
PairSpec pair_spec_from_json(const json& j);
PairSpec load_pair_spec(const std::filesystem::path& path);
json pair_spec_to_json(const GelfandPair& pair);

json h_series_to_json(const HSeries& h);

json schwarz_report_to_json(const SchwarzReport& rep);
std::string schwarz_report_to_csv(const SchwarzReport& rep);

/// CSV dump of a coefficient table: kind (b|a), index, degree, polynomial spec.
std::string coefficient_table_to_csv(const CoefficientTable& table);
json coefficient_table_to_json(const CoefficientTable& table);

/// FNV-1a 64-bit content digest, hex.
std::string fnv1a64_hex(std::string_view bytes);

/// Writes via a temp file and atomic rename.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

/// Run manifest: every emitted artifact with its content digest.
class RunManifest {
 public:
  RunManifest(std::string command, json inputs, json params);
  /// Writes `content` to dir/name atomically and records its digest.
  void emit(const std::filesystem::path& dir, const std::string& name,
            const std::string& content);
  /// Writes manifest.json itself.
  void finalize(const std::filesystem::path& dir);

 private:
  json doc_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gelfand

#endif
