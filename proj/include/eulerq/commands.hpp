// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command layer shared by the C API and the CLI. Each command produces a
// deterministic JSON envelope:
//   {"command": ..., "config": {...}, "result": {...}, "meta": {...}}
// with no timestamps anywhere, so identical configs give identical bytes.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "eulerq/convexity.hpp"
#include "eulerq/families.hpp"
#include "eulerq/serialize.hpp"

namespace eulerq {

enum class Command { table, cfrac, prodmat, check, conjecture, invert_moments, selftest };

const char* command_name(Command c);
Command parse_command(std::string_view name);

/// Exit statuses shared with the C API and the CLI.
enum class RunStatus : int { ok = 0, check_failed = 1, usage_error = 2, internal_error = 3 };

inline constexpr const char* kVersion = "1.0.0";

/// Upper bound on rows/order/depth accepted from the command line.
inline constexpr std::size_t kMaxRows = 24;
inline constexpr std::size_t kDefaultOrder = 12;

struct RunConfig {
  Command command = Command::selftest;
  std::optional<Family> family;
  std::optional<BigRational> t, a, d;
  std::optional<std::size_t> nmax;   // table/check rows, conjecture n_max
  Route route = Route::egf;          // table, check (qlcx|strong)
  std::string mode = "strong";       // check: qlcx | strong | zhu
  Triangle triangle = Triangle::EulerianA;
  std::string seq = "catalan";       // conjecture: builtin name or path to a JSON array
  std::optional<std::size_t> order;  // prodmat
  std::optional<std::size_t> depth;  // cfrac, invert-moments
  std::string moments;               // invert-moments: path or inline JSON
  std::string inject_fault;          // selftest: "" or "t1-sign"

  /// Sets one option from its command-line spelling ("family", "nmax", ...).
  /// Throws Errc::invalid_argument on an unknown key or malformed value.
  void set(std::string_view key, std::string_view value);
  json to_json() const;
};

struct RunResult {
  RunStatus status = RunStatus::ok;
  json envelope;
};

/// Runs one command. Usage problems throw Error(Errc::invalid_argument, ...);
/// mathematical failures (a check that does not hold, a moment sequence that
/// is not quasi-definite) come back as RunStatus::check_failed with a report.
RunResult run(const RunConfig& config);

/// Aligned plain-text rendering of an envelope for humans.
std::string render_text(const json& envelope);

/// One row of the selftest matrix.
struct AgreementCell {
  std::string family;
  std::size_t n = 0;
  std::string pair;  // e.g. "egf=cfrac"
  bool pass = false;
};

struct SelftestOptions {
  std::size_t rows = kDefaultOrder;
  bool flip_t1_sign = false;
};

/// EGF = continued fraction = enumeration (= recurrence where one exists) over
/// standard_instances(), keyed by (family, n, route pair).
std::vector<AgreementCell> agreement_matrix(const SelftestOptions& opts);

}  // namespace eulerq
