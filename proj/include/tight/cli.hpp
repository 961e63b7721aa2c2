#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace tight::cli {

inline constexpr int kSchemaVersion = 1;

enum class Status { ok, error };

struct CommandResult {
  Status status = Status::ok;
  nlohmann::ordered_json payload;  ///< schema-versioned document
  std::string message;             ///< error text, empty on success
  int exit_code = 0;               ///< 0 ok, 1 domain error, 2 usage error
};

struct VerifyRow {
  int p = 0;
  int q = 0;
  std::int64_t traversal = 0;
  std::int64_t formula = 0;
  bool pass() const { return traversal == formula; }
};

struct VerifyReport {
  std::vector<VerifyRow> rows;  ///< ordered by (p, q)
  bool all_pass() const;
};

/// Traversal against the product formula for every coprime 0 < q < p with
/// 2 <= p <= p_max. Pairs run concurrently; rows come back in (p, q) order.
/// Throws std::invalid_argument when p_max < 2.
VerifyReport verify(int p_max);

/// Parses and executes one command line (argv[0] is the program name).
/// The rendered output goes to `out` (or the --output file) and diagnostics
/// to `err`.
CommandResult run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tight::cli
