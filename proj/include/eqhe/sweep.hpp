#pragma once

// CSV and report generation behind the `eqhe` command-line tool. All output
// uses six fixed decimals, '.' as the decimal separator, ',' between fields,
// LF line endings and a header row. Rows are written in row-major order.

#include <iosfwd>
#include <string>
#include <vector>

#include "eqhe/otto_engine.hpp"
#include "eqhe/spin_model.hpp"

namespace eqhe::sweep {

// Upper end of the C2 axis; C2 = 1 needs an infinite coupling.
inline constexpr double kC2Max = 0.999;

// "%.6f", with "-0.000000" folded to "0.000000".
std::string fixed6(double value);

// {0, 0.25, 0.5, 0.75, 1}
std::vector<double> default_gammas();

// C2 = kC2Max * k / steps for k = 1..steps.
std::vector<double> c2_grid(int steps);

// `count` evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int count);

std::string cycle_report(const CycleSpec& spec);

struct Fig12Config {
  double th = 2.0;
  double tl = 1.0;
  std::vector<double> gammas = default_gammas();
  int c2_steps = 200;
  CouplingBranch branch = CouplingBranch::kAntiferromagnetic;
};

// Header: gamma,c2,c1,q_h,q_l,w
void write_fig12(std::ostream& out, const Fig12Config& config);

struct Fig3Config {
  std::vector<double> ratios{2.0, 5.0};  // T_h / T_l, evaluated at T_l = 1
  std::vector<double> gammas = default_gammas();
  int c2_steps = 200;
};

// Header: th_over_tl,gamma,c2,eta,eta_carnot,abrupt_flag
void write_fig3(std::ostream& out, const Fig3Config& config);

enum class RegionAxes {
  kGapTemperature,  // x = e2, y = T_h at fixed e1 (from j1, d1) and T_l
  kConcurrence,     // x = C2, y = C1 at fixed T_h, T_l
};

struct RegionConfig {
  RegionAxes axes = RegionAxes::kGapTemperature;
  double x_min = 0.1;
  double x_max = 3.0;
  double y_min = 1.1;
  double y_max = 8.0;
  int steps = 60;
  double j1 = 2.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double th = 2.0;  // concurrence axes only
  double tl = 1.0;
};

RegionConfig default_region(RegionAxes axes);

// Header: x,y,w,feasible. `feasible` comes from the analytic positive-work
// condition, not from the sign of w.
void write_region(std::ostream& out, const RegionConfig& config);

// Throw ConfigError on invalid sweep parameters.
void validate(const Fig12Config& config);
void validate(const Fig3Config& config);
void validate(const RegionConfig& config);

}  // namespace eqhe::sweep
