#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuspidal/linalg.hpp"

namespace cusp {

struct SuiteFailure {
  std::size_t index = 0;
  std::string instance;  ///< serialized instance (JSON)
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteFailure> failures;  ///< sorted by instance index
  double elapsed_ms = 0.0;

  bool ok() const { return failures.empty(); }
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Executes the named theorem suite on `count` seeded instances (the
/// esterov suite interprets count = 0 as the exhaustive planar sweep).
/// Instances may be checked in parallel when CUSPIDAL_THREADS is set; the
/// report is independent of the partitioning. Throws std::invalid_argument
/// for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t count);

}  // namespace cusp
