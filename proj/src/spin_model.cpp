#include "eqhe/spin_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eqhe/errors.hpp"

namespace eqhe {
namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

void require_temperature(double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw DomainError("temperature must be positive and finite");
  }
}

}  // namespace

double arcsinh_one() { return std::log(1.0 + std::sqrt(2.0)); }

double gap(const ModelParams& params) {
  require_finite(params.j, "coupling j");
  require_finite(params.d, "DM strength d");
  const double eps = params.j * std::hypot(1.0, params.d);
  require_finite(eps, "gap j*sqrt(1+d^2)");
  return eps;
}

Spectrum spectrum(const ModelParams& params) {
  const double eps = gap(params);
  return Spectrum{{0.0, 0.0, eps, -eps}, std::atan(params.d)};
}

ThermalState gibbs_occupations(const ModelParams& params, double temperature) {
  require_temperature(temperature);
  const Spectrum spec = spectrum(params);
  const double beta = 1.0 / temperature;

  ThermalState state;
  state.temperature = temperature;
  state.beta = beta;
  state.partition = 2.0 + 2.0 * std::cosh(beta * spec.energies[2]);

  const double ground = *std::min_element(spec.energies.begin(), spec.energies.end());
  double norm = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    state.probabilities[i] = std::exp(-beta * (spec.energies[i] - ground));
    norm += state.probabilities[i];
  }
  for (double& p : state.probabilities) p /= norm;
  return state;
}

double concurrence_of_scaled_gap(double x) {
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("scaled gap must be non-negative");
  }
  if (x <= arcsinh_one()) return 0.0;
  // (sinh x - 1)/(cosh x + 1) rewritten in u = e^{-x} to avoid inf/inf.
  const double u = std::exp(-x);
  return (1.0 - 2.0 * u - u * u) / ((1.0 + u) * (1.0 + u));
}

double concurrence(const ModelParams& params, double temperature) {
  require_temperature(temperature);
  // Compare against T_c itself so that T >= critical_temperature() gives an
  // exact zero regardless of rounding in |eps|/T.
  if (temperature >= critical_temperature(params)) return 0.0;
  return concurrence_of_scaled_gap(std::abs(gap(params)) / temperature);
}

double critical_temperature(const ModelParams& params) {
  return std::abs(gap(params)) / arcsinh_one();
}

double scaled_gap_from_concurrence(double c) {
  if (std::isnan(c) || c < 0.0) {
    throw DomainError("concurrence must be non-negative");
  }
  if (c >= 1.0) {
    throw DomainError("concurrence 1 requires an infinite coupling");
  }
  const double s = 1.0 + c;
  return std::log((s + std::sqrt(2.0 * s)) / (1.0 - c));
}

double coupling_from_concurrence(double c, double d, double temperature,
                                 CouplingBranch branch) {
  require_temperature(temperature);
  require_finite(d, "DM strength d");
  const double magnitude = temperature / std::hypot(1.0, d) * scaled_gap_from_concurrence(c);
  return branch == CouplingBranch::kAntiferromagnetic ? magnitude : -magnitude;
}

}  // namespace eqhe
