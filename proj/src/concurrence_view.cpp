#include "eqhe/concurrence_view.hpp"

#include <cmath>
#include <numbers>

#include "eqhe/errors.hpp"

namespace eqhe {
namespace {

void validate_temperatures(double th, double tl) {
  if (!std::isfinite(th) || !std::isfinite(tl) || !(tl > 0.0)) {
    throw ConfigError("bath temperatures must be positive and finite");
  }
  if (!(th > tl)) throw ConfigError("bath temperatures must satisfy Th > Tl");
}

// ln(-1 + sqrt(2/(1+c))), the ferromagnetic-branch logarithm. The argument is
// rewritten as ((1-c)/(1+c)) / (1 + sqrt(2/(1+c))) so it does not cancel near c = 1.
double ferromagnetic_log(double c) {
  scaled_gap_from_concurrence(c);  // domain check
  const double r = 2.0 / (1.0 + c);
  return std::log(((1.0 - c) / (1.0 + c)) / (1.0 + std::sqrt(r)));
}

}  // namespace

std::optional<double> gamma(const ConcurrenceCycleSpec& spec) {
  if (spec.c2 == 0.0) return std::nullopt;
  return spec.c1 / spec.c2;
}

void validate(const ConcurrenceCycleSpec& spec) {
  scaled_gap_from_concurrence(spec.c1);
  scaled_gap_from_concurrence(spec.c2);
  validate_temperatures(spec.th, spec.tl);
  if (!std::isfinite(spec.d1) || !std::isfinite(spec.d2)) {
    throw ConfigError("DM strengths must be finite");
  }
}

double scaled_gap_reciprocal_form(double c) {
  scaled_gap_from_concurrence(c);
  return std::log(1.0 / (-1.0 + std::sqrt(2.0 / (1.0 + c))));
}

CycleResult cycle_from_concurrence(const ConcurrenceCycleSpec& spec) {
  validate(spec);
  constexpr double kSqrt2 = std::numbers::sqrt2;
  const double s1 = std::sqrt(1.0 + spec.c1);
  const double s2 = std::sqrt(1.0 + spec.c2);

  CycleResult r;
  if (spec.branch == CouplingBranch::kAntiferromagnetic) {
    const double l1 = scaled_gap_from_concurrence(spec.c1);
    const double l2 = scaled_gap_from_concurrence(spec.c2);
    r.q_h = kSqrt2 * l1 * (s2 - s1) * spec.th;
    r.q_l = kSqrt2 * l2 * (s1 - s2) * spec.tl;
  } else {
    const double m1 = ferromagnetic_log(spec.c1);
    const double m2 = ferromagnetic_log(spec.c2);
    r.q_h = kSqrt2 * m1 * (s1 - s2) * spec.th;
    r.q_l = kSqrt2 * m2 * (s2 - s1) * spec.tl;
  }
  r.w = r.q_h + r.q_l;
  r.eta_carnot = carnot_efficiency(spec.th, spec.tl);
  r.regime = classify_cycle(r.q_h, r.q_l, r.w);
  if (r.regime == CycleCase::kEngine) {
    r.eta = efficiency_from_concurrence(spec.c1, spec.c2, spec.th, spec.tl).eta;
  }
  if (r.regime != CycleCase::kTrivial && r.q_h != 0.0) r.work_ratio = r.w / r.q_h;
  return r;
}

CycleSpec reconstruct_cycle(const ConcurrenceCycleSpec& spec) {
  validate(spec);
  CycleSpec cycle;
  cycle.hot = {{coupling_from_concurrence(spec.c1, spec.d1, spec.th, spec.branch), spec.d1},
               spec.th};
  cycle.cold = {{coupling_from_concurrence(spec.c2, spec.d2, spec.tl, spec.branch), spec.d2},
                spec.tl};
  return cycle;
}

std::string_view to_string(WorkCaseReason reason) {
  switch (reason) {
    case WorkCaseReason::kPositiveWork: return "positive-work";
    case WorkCaseReason::kEqualConcurrence: return "equal-concurrence";
    case WorkCaseReason::kHotMoreEntangled: return "hot-more-entangled";
    case WorkCaseReason::kInsufficientHotGap: return "insufficient-hot-gap";
  }
  return "unknown";
}

WorkCaseReport classify_positive_work(const ConcurrenceCycleSpec& spec) {
  validate(spec);
  const double s1 = std::sqrt(1.0 + spec.c1);
  const double s2 = std::sqrt(1.0 + spec.c2);
  const double hot = scaled_gap_from_concurrence(spec.c1) * spec.th;
  const double cold = scaled_gap_from_concurrence(spec.c2) * spec.tl;

  WorkCaseReport report;
  report.case12 = s1 < s2 && hot > cold;
  report.case13 = s1 > s2 && hot < cold;
  report.feasible = report.case12;
  if (report.case12) {
    report.reason = WorkCaseReason::kPositiveWork;
  } else if (s1 == s2) {
    report.reason = WorkCaseReason::kEqualConcurrence;
  } else if (s1 > s2) {
    report.reason = WorkCaseReason::kHotMoreEntangled;
  } else {
    report.reason = WorkCaseReason::kInsufficientHotGap;
  }
  return report;
}

ConcurrenceEfficiency efficiency_from_concurrence(double c1, double c2, double th, double tl) {
  const double l1 = scaled_gap_from_concurrence(c1);
  const double l2 = scaled_gap_from_concurrence(c2);
  validate_temperatures(th, tl);
  if (c1 > c2) {
    throw ConfigError("efficiency in concurrence form requires C1 <= C2");
  }
  if (c1 == c2) return {0.0, true};
  return {1.0 - (l2 * tl) / (l1 * th), false};
}

}  // namespace eqhe
