#pragma once

#include "lk/garside.hpp"
#include "lk/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lk {

struct CheckResult {
  std::string name;
  bool pass = true;
  /// Failing indices, columns or a short description; empty on success.
  std::string witness;
  /// Informational value such as the scalar of rho(b(w0)).
  std::string detail;
};

struct VerifyOptions {
  Rational r0{1, 2};
  std::uint64_t seed = 1;
  Budget budget;
  /// Longest word length for the exhaustive word suites; 0 picks a default.
  int length = 0;
};

const std::vector<std::string>& suite_names();

/// Why a suite cannot run within the budgets, if it cannot.
std::optional<std::string> suite_infeasible(const std::string& suite, const RootSystem& rs, const VerifyOptions& options);

/// Runs one suite. Throws UnknownSuite. Exceptions from the library inside a
/// suite become failed checks carrying the message.
std::vector<CheckResult> run_suite(const std::string& suite, const Representation& rep, const VerifyOptions& options);

/// Sorted by check name.
std::vector<CheckResult> run_suites(const std::vector<std::string>& suites, const Representation& rep,
                                    const VerifyOptions& options);

json report_to_json(const TypeSpec& spec, const std::vector<std::string>& suites, const std::vector<CheckResult>& checks);

}  // namespace lk
