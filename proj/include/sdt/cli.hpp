#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdt/group_spec.hpp"
#include "sdt/rational.hpp"

namespace sdt::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

struct Caps {
  std::size_t group_order = 64;
  std::size_t bruteforce_order = 16;
  std::size_t subset_search = 20;
  std::size_t fragment_cap = 100000;
};

/// Defaults overridden by SDT_MAX_ORDER, SDT_BRUTEFORCE_ORDER,
/// SDT_SUBSET_SEARCH and SDT_FRAGMENT_CAP.
Caps caps_from_env();
nlohmann::json to_json(const Caps& caps);
Caps caps_from_json(const nlohmann::json& j);

struct RunConfig {
  std::string command;  // "theorem-main", "conv gap", "search kneser-failure", ...
  std::string group_text;
  std::optional<GroupSpec> group;
  std::map<std::string, std::string> sets;  // raw literals by name (A, B, S)
  std::optional<Rational> epsilon;
  std::optional<Rational> K;
  std::optional<Rational> threshold;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::string format = "json";
  Caps caps;
  bool fragments = false;
  std::string solver = "subgroup";
  std::string mode = "exhaustive";
  std::string strategy = "exhaustive";
  std::string certificate_path;
  std::string out_path;
  std::string help_text;  // set when --help was requested

  nlohmann::json snapshot() const;
};

/// `args` excludes the program name. Throws Error(UsageError) naming the
/// offending flag, or SizeLimitExceeded when the group is above the cap.
RunConfig parse_args(const std::vector<std::string>& args);

struct RunRecord {
  nlohmann::json config;
  std::string tool_version = kToolVersion;
  double wall_time_ms = 0;
  nlohmann::json certificate;
  int schema_version = kSchemaVersion;
  int exit_code = kExitVerified;

  nlohmann::json to_json() const;
};

RunRecord dispatch(const RunConfig& config);

/// Recomputes a certificate from its kind, group and inputs, digest included.
nlohmann::json compute_certificate(const std::string& kind, const nlohmann::json& group,
                                   const nlohmann::json& inputs);

/// SHA-256 over the compact dump of the certificate without its digest.
std::string certificate_digest(const nlohmann::json& certificate);

struct FieldDiff {
  std::string path;
  nlohmann::json expected;
  nlohmann::json found;
};

struct RecheckOutcome {
  bool ok = false;
  bool digest_ok = false;
  std::string kind;
  std::vector<FieldDiff> diffs;
  std::string error;
};

/// Accepts a RunRecord document or a bare certificate.
RecheckOutcome recheck(const nlohmann::json& document);

std::string render_text(const nlohmann::json& document);

/// Whole front end: parse, dispatch, print once; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdt::cli
