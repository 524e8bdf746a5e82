#include "eqhe/sweep.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "eqhe/concurrence_view.hpp"
#include "eqhe/errors.hpp"

namespace eqhe::sweep {
namespace {

void require_steps(int steps, const char* name) {
  if (steps < 2) throw ConfigError(fmt::format("{} must be at least 2", name));
}

void require_gammas(const std::vector<double>& gammas) {
  if (gammas.empty()) throw ConfigError("gamma list must not be empty");
  for (double g : gammas) {
    if (!std::isfinite(g) || g < 0.0 || g > 1.0) {
      throw ConfigError(fmt::format("gamma values must lie in [0, 1], got {}", g));
    }
  }
}

void require_bounds(double lo, double hi, const char* axis) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ConfigError(fmt::format("{} bounds must be finite with min < max", axis));
  }
}

}  // namespace

std::string fixed6(double value) {
  std::string s = fmt::format("{:.6f}", value);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

std::vector<double> default_gammas() { return {0.0, 0.25, 0.5, 0.75, 1.0}; }

std::vector<double> c2_grid(int steps) {
  require_steps(steps, "c2 resolution");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 1; k <= steps; ++k) grid[k - 1] = kC2Max * k / steps;
  return grid;
}

std::vector<double> linspace(double lo, double hi, int count) {
  require_steps(count, "grid resolution");
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
  v.back() = hi;
  return v;
}

std::string cycle_report(const CycleSpec& spec) {
  const CycleResult r = run_cycle(spec);
  std::string out;
  out += "Q_h: " + fixed6(r.q_h) + "\n";
  out += "Q_l: " + fixed6(r.q_l) + "\n";
  out += "W: " + fixed6(r.w) + "\n";
  out += "eta: " + (r.eta ? fixed6(*r.eta) : std::string("undefined")) + "\n";
  if (!r.eta && r.work_ratio) out += "work_ratio: " + fixed6(*r.work_ratio) + "\n";
  out += "eta_carnot: " + fixed6(r.eta_carnot) + "\n";
  out += "case: " + std::string(to_string(r.regime)) + "\n";
  std::string condition;
  switch (positive_work_condition(spec)) {
    case PositiveWork::kHolds: condition = "holds"; break;
    case PositiveWork::kFails: condition = "fails"; break;
    case PositiveWork::kOutOfRegime: condition = "out-of-regime (requires 0 < e2 < e1)"; break;
  }
  out += "positive_work_condition: " + condition + "\n";
  return out;
}

void validate(const Fig12Config& config) {
  require_gammas(config.gammas);
  require_steps(config.c2_steps, "c2 resolution");
  carnot_efficiency(config.th, config.tl);
  if (!(config.th > config.tl)) throw ConfigError("bath temperatures must satisfy Th > Tl");
}

void write_fig12(std::ostream& out, const Fig12Config& config) {
  validate(config);
  const auto grid = c2_grid(config.c2_steps);
  out << "gamma,c2,c1,q_h,q_l,w\n";
  for (double g : config.gammas) {
    for (double c2 : grid) {
      const double c1 = g * c2;
      const CycleResult r =
          cycle_from_concurrence({c1, c2, config.th, config.tl, 0.0, 0.0, config.branch});
      fmt::print(out, "{},{},{},{},{},{}\n", fixed6(g), fixed6(c2), fixed6(c1), fixed6(r.q_h),
                 fixed6(r.q_l), fixed6(r.w));
    }
  }
}

void validate(const Fig3Config& config) {
  require_gammas(config.gammas);
  require_steps(config.c2_steps, "c2 resolution");
  if (config.ratios.empty()) throw ConfigError("temperature ratio list must not be empty");
  for (double ratio : config.ratios) {
    if (!std::isfinite(ratio) || !(ratio > 1.0)) {
      throw ConfigError("bath temperatures must satisfy Th > Tl (ratio > 1)");
    }
  }
}

void write_fig3(std::ostream& out, const Fig3Config& config) {
  validate(config);
  const auto grid = c2_grid(config.c2_steps);
  out << "th_over_tl,gamma,c2,eta,eta_carnot,abrupt_flag\n";
  for (double ratio : config.ratios) {
    const double eta_c = carnot_efficiency(ratio, 1.0);
    for (double g : config.gammas) {
      for (double c2 : grid) {
        const ConcurrenceEfficiency e = efficiency_from_concurrence(g * c2, c2, ratio, 1.0);
        fmt::print(out, "{},{},{},{},{},{}\n", fixed6(ratio), fixed6(g), fixed6(c2),
                   fixed6(e.eta), fixed6(eta_c), e.abrupt_transition ? 1 : 0);
      }
    }
  }
}

RegionConfig default_region(RegionAxes axes) {
  RegionConfig config;
  config.axes = axes;
  if (axes == RegionAxes::kConcurrence) {
    config.x_min = 0.0;
    config.x_max = 0.99;
    config.y_min = 0.0;
    config.y_max = 0.99;
  }
  return config;
}

void validate(const RegionConfig& config) {
  require_steps(config.steps, "grid resolution");
  require_bounds(config.x_min, config.x_max, "x");
  require_bounds(config.y_min, config.y_max, "y");
  if (config.axes == RegionAxes::kGapTemperature) {
    if (!(config.x_min > 0.0)) throw ConfigError("e2 axis must stay positive (x_min > 0)");
    if (!(config.tl > 0.0)) throw ConfigError("bath temperatures must be positive and finite");
    if (!(config.y_min > config.tl)) {
      throw ConfigError("bath temperatures must satisfy Th > Tl (y_min > tl)");
    }
    if (!(config.j1 > 0.0)) throw ConfigError("gap/temperature region requires J1 > 0");
  } else {
    if (config.x_min < 0.0 || config.y_min < 0.0 || config.x_max >= 1.0 || config.y_max >= 1.0) {
      throw ConfigError("concurrence axes must lie in [0, 1)");
    }
    carnot_efficiency(config.th, config.tl);
    if (!(config.th > config.tl)) throw ConfigError("bath temperatures must satisfy Th > Tl");
  }
}

void write_region(std::ostream& out, const RegionConfig& config) {
  validate(config);
  const auto xs = linspace(config.x_min, config.x_max, config.steps);
  const auto ys = linspace(config.y_min, config.y_max, config.steps);
  out << "x,y,w,feasible\n";
  for (double y : ys) {
    for (double x : xs) {
      double w = 0.0;
      bool feasible = false;
      if (config.axes == RegionAxes::kGapTemperature) {
        CycleSpec spec;
        spec.hot = {{config.j1, config.d1}, y};
        spec.cold = {{x / std::hypot(1.0, config.d2), config.d2}, config.tl};
        w = run_cycle(spec).w;
        // Outside 0 < e2 < e1 no positive work is possible for T_h > T_l.
        feasible = positive_work_condition(spec) == PositiveWork::kHolds;
      } else {
        const ConcurrenceCycleSpec spec{y, x, config.th, config.tl, 0.0, 0.0,
                                        CouplingBranch::kAntiferromagnetic};
        w = cycle_from_concurrence(spec).w;
        feasible = classify_positive_work(spec).feasible;
      }
      fmt::print(out, "{},{},{},{}\n", fixed6(x), fixed6(y), fixed6(w), feasible ? 1 : 0);
    }
  }
}

}  // namespace eqhe::sweep
