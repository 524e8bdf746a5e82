#pragma once

// Cross-checks of the closed-form model against the numeric oracle, plus the
// first-law, second-law, inversion and view-consistency property suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqhe/otto_engine.hpp"

namespace eqhe::verify {

inline constexpr double kTolerance = 1e-10;
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct VerifyConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 1000;
  int near_threshold_samples = 50;
  // Negative control: flips the sign of the closed-form Q_h before it is
  // compared with the oracle.
  bool inject_fault = false;
};

struct SuiteOutcome {
  std::string name;
  std::size_t checked = 0;
  double max_deviation = 0.0;
  double tolerance = kTolerance;
  std::optional<std::string> first_failure;  // offending parameter tuple

  bool passed() const { return !first_failure.has_value(); }
};

struct VerifyReport {
  std::vector<SuiteOutcome> suites;

  bool passed() const;
};

SuiteOutcome spectrum_suite(const VerifyConfig& config);
SuiteOutcome oracle_equivalence_suite(const VerifyConfig& config);
SuiteOutcome concurrence_suite(const VerifyConfig& config);
SuiteOutcome first_law_suite(const VerifyConfig& config);
SuiteOutcome second_law_suite();
SuiteOutcome round_trip_suite();
SuiteOutcome view_consistency_suite(const VerifyConfig& config);

// The 100 x 100 x 10 grid of valid cycle specs used by the second-law suite.
std::vector<CycleSpec> second_law_grid();

VerifyReport run_all(const VerifyConfig& config);

std::string format_report(const VerifyReport& report, const VerifyConfig& config);

std::string describe(const CycleSpec& spec);

}  // namespace eqhe::verify
