#pragma once

// The Otto cycle re-expressed in the stage-end concurrences
// C1 (after the hot isochore, at T_h) and C2 (after the cold isochore, at T_l).
// Writing L(c) for the scaled gap that produces concurrence c,
//
//   Q_h = sqrt2 T_h L(C1) (sqrt(1+C2) - sqrt(1+C1))
//   Q_l = sqrt2 T_l L(C2) (sqrt(1+C1) - sqrt(1+C2))
//   eta = 1 - T_l L(C2) / (T_h L(C1))
//
// The ferromagnetic branch carries ln(-1 + sqrt(2/(1+C))) = -L(C) and an
// opposite sign on the sqrt difference; both branches give the same numbers.

#include <optional>
#include <string_view>

#include "eqhe/otto_engine.hpp"
#include "eqhe/spin_model.hpp"

namespace eqhe {

struct ConcurrenceCycleSpec {
  double c1 = 0.0;  // hot-stage concurrence
  double c2 = 0.0;  // cold-stage concurrence
  double th = 0.0;
  double tl = 0.0;
  double d1 = 0.0;  // only used to reconstruct couplings
  double d2 = 0.0;
  CouplingBranch branch = CouplingBranch::kAntiferromagnetic;
};

// C1/C2, or nullopt when C2 = 0.
std::optional<double> gamma(const ConcurrenceCycleSpec& spec);

// Throws DomainError for c outside [0, 1), ConfigError unless T_h > T_l > 0.
void validate(const ConcurrenceCycleSpec& spec);

// ln(1 / (-1 + sqrt(2/(1+c)))): algebraically equal to
// scaled_gap_from_concurrence, but loses accuracy as c -> 1.
double scaled_gap_reciprocal_form(double c);

CycleResult cycle_from_concurrence(const ConcurrenceCycleSpec& spec);

// Couplings (J1 at T_h, J2 at T_l) that realize the requested concurrences.
CycleSpec reconstruct_cycle(const ConcurrenceCycleSpec& spec);

enum class WorkCaseReason {
  kPositiveWork,         // C1 < C2 and T_h L(C1) > T_l L(C2)
  kEqualConcurrence,     // C1 = C2: trivial cycle
  kHotMoreEntangled,     // C1 > C2
  kInsufficientHotGap,   // C1 < C2 but T_h L(C1) <= T_l L(C2)
};

std::string_view to_string(WorkCaseReason reason);

struct WorkCaseReport {
  bool case12 = false;  // sqrt(1+C1) < sqrt(1+C2) and T_h L(C1) > T_l L(C2)
  bool case13 = false;  // sqrt(1+C1) > sqrt(1+C2) and T_h L(C1) < T_l L(C2)
  bool feasible = false;
  WorkCaseReason reason = WorkCaseReason::kEqualConcurrence;
};

WorkCaseReport classify_positive_work(const ConcurrenceCycleSpec& spec);

struct ConcurrenceEfficiency {
  double eta = 0.0;
  bool abrupt_transition = false;  // C1 = C2: eta reported as 0 although the formula tends to eta_c
};

// Defined for C1 <= C2 only; C1 > C2 throws ConfigError.
ConcurrenceEfficiency efficiency_from_concurrence(double c1, double c2, double th, double tl);

}  // namespace eqhe
