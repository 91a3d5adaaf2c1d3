#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galcov {

struct SuiteResult {
  int id = 0; // criterion number, 0 for the extra selftest suites
  std::string name;
  bool pass = false;
  double seconds = 0;       // wall time of the slowest unit the limit applies to
  double limit_seconds = 0; // 0 = no limit
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 20241014;
  std::size_t random_instances = 20; // per group, criterion 2
  std::size_t basis_changes = 50;    // criterion 8
};

/// Criterion 1..8; exceptions are caught and reported as failures.
SuiteResult run_criterion(int id, const SuiteOptions &opt = {});
std::vector<SuiteResult> run_acceptance(const SuiteOptions &opt = {});

/// Acceptance criteria plus the negative control, serial/parallel
/// determinism and serialization roundtrips.
std::vector<SuiteResult> run_selftest(const SuiteOptions &opt = {});

/// "PASS [3] name (0.12 s, limit 5 s) detail"
std::string format_line(const SuiteResult &r);

} // namespace galcov
