#include "eqhe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "eqhe/concurrence_view.hpp"
#include "eqhe/numeric_oracle.hpp"
#include "eqhe/sampling.hpp"
#include "eqhe/spin_model.hpp"

namespace eqhe::verify {
namespace {

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    outcome_.name = std::move(name);
    outcome_.tolerance = tolerance;
  }

  // `violated` overrides the tolerance test when set.
  void record(double deviation, const std::function<std::string()>& describe_point,
              bool violated = false) {
    ++outcome_.checked;
    if (std::isnan(deviation) || deviation > outcome_.max_deviation) {
      outcome_.max_deviation = deviation;
    }
    const bool bad = violated || !(deviation <= outcome_.tolerance);
    if (bad && !outcome_.first_failure) outcome_.first_failure = describe_point();
  }

  SuiteOutcome finish() { return std::move(outcome_); }

 private:
  SuiteOutcome outcome_;
};

std::string describe(const ModelParams& p, double temperature) {
  return fmt::format("j={:.17g} d={:.17g} T={:.17g}", p.j, p.d, temperature);
}

double max_cycle_deviation(const CycleResult& a, const CycleResult& b) {
  return std::max({std::abs(a.q_h - b.q_h), std::abs(a.q_l - b.q_l), std::abs(a.w - b.w)});
}

// Each suite draws from its own stream so adding samples to one suite does
// not shift the others.
Sampler suite_sampler(const VerifyConfig& config, std::uint64_t suite) {
  return Sampler(config.seed * 0x9E3779B97F4A7C15ULL + suite);
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteOutcome& s) { return s.passed(); });
}

std::string describe(const CycleSpec& spec) {
  return fmt::format("j1={:.17g} d1={:.17g} th={:.17g} j2={:.17g} d2={:.17g} tl={:.17g}",
                     spec.hot.model.j, spec.hot.model.d, spec.hot.temperature,
                     spec.cold.model.j, spec.cold.model.d, spec.cold.temperature);
}

SuiteOutcome spectrum_suite(const VerifyConfig& config) {
  Tracker t("spectrum", kTolerance);
  Sampler sampler = suite_sampler(config, 1);
  for (int i = 0; i < config.samples; ++i) {
    const GibbsSample s = random_gibbs_sample(sampler);
    const Spectrum closed = spectrum(s.params);
    const Spectrum numeric = oracle::diagonalize(s.params);
    double dev = std::abs(closed.theta - numeric.theta);
    for (std::size_t k = 0; k < 4; ++k) {
      dev = std::max(dev, std::abs(closed.energies[k] - numeric.energies[k]));
    }
    t.record(dev, [&] { return fmt::format("j={:.17g} d={:.17g}", s.params.j, s.params.d); });
  }
  return t.finish();
}

SuiteOutcome oracle_equivalence_suite(const VerifyConfig& config) {
  Tracker t("oracle-equivalence", kTolerance);
  Sampler sampler = suite_sampler(config, 2);
  for (int i = 0; i < config.samples; ++i) {
    const CycleSpec spec = random_cycle_spec(sampler);
    CycleResult closed = run_cycle(spec);
    if (config.inject_fault) {
      closed.q_h = -closed.q_h;
      closed.w = closed.q_h + closed.q_l;
    }
    const CycleResult numeric = oracle::simulate_cycle(spec);
    t.record(max_cycle_deviation(closed, numeric), [&] { return describe(spec); });
  }
  return t.finish();
}

SuiteOutcome concurrence_suite(const VerifyConfig& config) {
  Tracker t("concurrence", kTolerance);
  Sampler sampler = suite_sampler(config, 3);
  auto check = [&](const GibbsSample& s) {
    const double numeric =
        oracle::wootters_concurrence(oracle::gibbs_density_matrix(s.params, s.temperature));
    const double closed = concurrence(s.params, s.temperature);
    t.record(std::abs(numeric - closed), [&] { return describe(s.params, s.temperature); });
  };
  for (int i = 0; i < config.samples; ++i) check(random_gibbs_sample(sampler));
  for (int i = 0; i < config.near_threshold_samples; ++i) {
    check(near_threshold_gibbs_sample(sampler));
  }
  return t.finish();
}

SuiteOutcome first_law_suite(const VerifyConfig& config) {
  Tracker t("first-law", kTolerance);
  Sampler sampler = suite_sampler(config, 4);
  for (int i = 0; i < config.samples; ++i) {
    const CycleSpec spec = random_cycle_spec(sampler);
    const CycleResult r = run_cycle(spec);
    const StrokeLedger ledger = trace_strokes(spec);
    const double dev = std::max({std::abs(r.w - (r.q_h + r.q_l)),
                                 std::abs(r.w - ledger.work_out()),
                                 std::abs(r.q_h - ledger.heat_hot),
                                 std::abs(r.q_l - ledger.heat_cold)});
    t.record(dev, [&] { return describe(spec); });
  }
  return t.finish();
}

std::vector<CycleSpec> second_law_grid() {
  constexpr int kCouplings = 100;
  constexpr int kBaths = 10;
  std::vector<CycleSpec> grid;
  grid.reserve(kCouplings * kCouplings * kBaths);
  for (int k = 0; k < kBaths; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const double tl = 0.1 + 0.3 * k;
    const double th = tl * (1.1 + 0.4 * k);
    for (int a = 0; a < kCouplings; ++a) {
      const double j1 = 0.1 + 4.9 * a / (kCouplings - 1);
      const double d1 = -3.0 + 6.0 * ((7 * a) % kCouplings) / (kCouplings - 1);
      for (int b = 0; b < kCouplings; ++b) {
        const double j2 = 0.1 + 4.9 * b / (kCouplings - 1);
        const double d2 = -3.0 + 6.0 * ((13 * b) % kCouplings) / (kCouplings - 1);
        grid.push_back({{{sign * j1, d1}, th}, {{sign * j2, d2}, tl}});
      }
    }
  }
  return grid;
}

SuiteOutcome second_law_suite() {
  // Deviation is how far eta reaches past eta_c; any eta >= eta_c or any
  // positive-work cycle outside Q_h > -Q_l > 0 is a violation. Cycles whose
  // heats are within kTrivialTolerance of zero count as W = 0.
  Tracker t("second-law", 0.0);
  for (const CycleSpec& spec : second_law_grid()) {
    const CycleResult r = run_cycle(spec);
    if (!(r.w > 0.0) || r.regime == CycleCase::kTrivial) continue;
    const bool engine_case = r.regime == CycleCase::kEngine && r.eta.has_value();
    const double eta = engine_case ? *r.eta : std::numeric_limits<double>::quiet_NaN();
    const bool violated = !engine_case || !(eta < r.eta_carnot);
    t.record(engine_case ? std::max(0.0, eta - r.eta_carnot) : 1.0,
             [&] { return describe(spec); }, violated);
  }
  return t.finish();
}

SuiteOutcome round_trip_suite() {
  Tracker t("round-trip", kTolerance);
  for (int step = 1; step <= 99; ++step) {
    const double c = step / 100.0;
    for (double d : {0.0, 1.0, 5.0}) {
      for (double temperature : {0.5, 1.0, 3.0}) {
        const double afm =
            coupling_from_concurrence(c, d, temperature, CouplingBranch::kAntiferromagnetic);
        const double fm = coupling_from_concurrence(c, d, temperature, CouplingBranch::kFerromagnetic);
        const double dev = std::max({std::abs(concurrence({afm, d}, temperature) - c),
                                     std::abs(concurrence({fm, d}, temperature) - c),
                                     std::abs(afm + fm)});
        t.record(dev, [&] { return fmt::format("c={:.17g} d={:.17g} T={:.17g}", c, d, temperature); });
      }
    }
  }
  return t.finish();
}

SuiteOutcome view_consistency_suite(const VerifyConfig& config) {
  Tracker t("view-consistency", kTolerance);
  Sampler sampler = suite_sampler(config, 7);
  for (int i = 0; i < config.samples; ++i) {
    ConcurrenceCycleSpec spec;
    spec.c1 = sampler.uniform_left_open(0.0, 0.99);
    spec.c2 = sampler.uniform_left_open(0.0, 0.99);
    spec.tl = sampler.uniform_left_open(0.05, 3.0);
    spec.th = sampler.uniform_left_open(spec.tl, 5.0);
    spec.d1 = sampler.uniform(-3.0, 3.0);
    spec.d2 = sampler.uniform(-3.0, 3.0);
    spec.branch = sampler.coin() ? CouplingBranch::kAntiferromagnetic : CouplingBranch::kFerromagnetic;
    if (!(spec.th > spec.tl)) continue;

    const CycleResult view = cycle_from_concurrence(spec);
    const CycleResult direct = run_cycle(reconstruct_cycle(spec));
    t.record(max_cycle_deviation(view, direct), [&] {
      return fmt::format("c1={:.17g} c2={:.17g} th={:.17g} tl={:.17g} d1={:.17g} d2={:.17g} {}",
                         spec.c1, spec.c2, spec.th, spec.tl, spec.d1, spec.d2,
                         spec.branch == CouplingBranch::kAntiferromagnetic ? "afm" : "fm");
    });
  }
  return t.finish();
}

VerifyReport run_all(const VerifyConfig& config) {
  VerifyReport report;
  report.suites.push_back(spectrum_suite(config));
  report.suites.push_back(oracle_equivalence_suite(config));
  report.suites.push_back(concurrence_suite(config));
  report.suites.push_back(first_law_suite(config));
  report.suites.push_back(second_law_suite());
  report.suites.push_back(round_trip_suite());
  report.suites.push_back(view_consistency_suite(config));
  return report;
}

std::string format_report(const VerifyReport& report, const VerifyConfig& config) {
  std::string out = fmt::format("eqhe verify: seed={} samples={} near_threshold={}{}\n", config.seed,
                                config.samples, config.near_threshold_samples,
                                config.inject_fault ? " fault=injected" : "");
  for (const SuiteOutcome& s : report.suites) {
    out += fmt::format("{:<20} checked={:<7} max_dev={:.3e} tol={:.1e} {}\n", s.name, s.checked,
                       s.max_deviation, s.tolerance, s.passed() ? "PASS" : "FAIL");
    if (s.first_failure) out += fmt::format("  first failure: {}\n", *s.first_failure);
  }
  out += fmt::format("overall: {}\n", report.passed() ? "PASS" : "FAIL");
  return out;
}

}  // namespace eqhe::verify
