#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace antichain {

/// One line of a verification report.
struct CheckRecord {
  std::string check_name;
  nlohmann::json params;
  std::string expected;
  std::string actual;
  bool pass = false;

  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::int64_t max_product = 400;  // element cap for the Dilworth grid and random shapes
  std::int64_t max_n = 6;          // cross-formula grid upper n
  std::int64_t max_m = 12;         // cross-formula grid upper m
  std::uint64_t seed = 1;
  int random_shapes = 25;
  /// Negative control: perturbs the heterogeneous formula by +1 so that
  /// every check depending on it must fail.
  bool inject_fault = false;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  std::size_t failures() const;
  /// {"checks": [...], "summary": {"total", "passed", "failed", "all_pass"}}
  nlohmann::json to_json() const;
};

/// Runs the cross-formula grids, the enumeration and Dilworth oracles, the
/// recorded formula-discrepancy probes and the asymptotic checks.
VerifyReport run_verification(const VerifyOptions& options);

/// The thirteen (shape, size) rows of the published largest-antichain table.
/// Two printed sizes disagree with every independent computation; for those
/// rows `confirmed` holds the value reproduced by convolution, enumeration
/// and Dilworth matching.
struct PublishedSize {
  std::vector<std::int64_t> shape;
  const char* printed;
  const char* confirmed = nullptr;

  const char* reference() const { return confirmed ? confirmed : printed; }
};
const std::vector<PublishedSize>& published_sizes();

}  // namespace antichain
