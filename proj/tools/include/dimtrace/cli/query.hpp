#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dimtrace/certificate.hpp"

namespace dimtrace::cli {

using nlohmann::json;

enum class Kind { kTrace1d, kTraceRational, kFitting, kSimplicial, kDirectSum, kSimplex, kPolytopeInfo };

/// "trace-1d", "trace-rational", "fitting", "simplicial", "directsum",
/// "simplex", "polytope-info".
const char* to_string(Kind k);
Kind parse_kind(std::string_view name);

struct Options {
  std::optional<unsigned long> n_max;  // fitting boost limit, default 64
  std::optional<unsigned long> bound;  // simplicial oracle bound, default 3
  bool oracle = false;
};

struct Query {
  Kind kind = Kind::kSimplicial;
  json payload;
  Options options;
};

/// Validates `payload` against the schema of `kind` and rewrites it with
/// rationals as "p/q" strings and term lists sorted. Throws InvalidInput
/// naming the offending path.
json canonical_payload(Kind kind, const json& payload);

/// {"kind", "options", "payload"} in canonical form; the digest is taken
/// over its compact serialization.
json canonical_query(const Query& q);

/// Hex SHA-256 of the canonical query.
std::string digest(const Query& q);

struct OracleCheck {
  std::string method;
  std::optional<bool> agrees;  // empty when the oracle does not apply
};

struct VerdictRecord {
  std::string digest;
  Kind kind = Kind::kSimplicial;
  bool verdict = false;
  Certificate certificate;
  std::optional<OracleCheck> oracle;
  std::string version;
  double wall_time = 0;  // seconds; outside the deterministic part
};

/// Dispatches to the owning module. Module errors propagate unchanged.
VerdictRecord run_query(const Query& q);

/// The record without wall_time: identical queries give identical text.
json deterministic_json(const VerdictRecord& r);
json to_json(const VerdictRecord& r);
std::string format_human(const VerdictRecord& r);

/// Appends one compact JSON line. Throws Error when the file cannot be
/// written.
void append_ledger(const std::string& path, const VerdictRecord& r);

const char* version();

}  // namespace dimtrace::cli
