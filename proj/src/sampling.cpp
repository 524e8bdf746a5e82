#include "eqhe/sampling.hpp"

#include <cmath>

namespace eqhe {

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

double Sampler::uniform_left_open(double lo, double hi) {
  const double unit = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

bool Sampler::coin() { return (engine_() >> 63) != 0; }

CycleSpec random_cycle_spec(Sampler& sampler) {
  const double sign = sampler.coin() ? 1.0 : -1.0;
  CycleSpec spec;
  spec.hot.model = {sign * sampler.uniform(0.1, 5.0), sampler.uniform(-3.0, 3.0)};
  spec.cold.model = {sign * sampler.uniform(0.1, 5.0), sampler.uniform(-3.0, 3.0)};
  spec.cold.temperature = sampler.uniform_left_open(0.05, 3.0);
  spec.hot.temperature = sampler.uniform_left_open(spec.cold.temperature, 5.0);
  if (!(spec.hot.temperature > spec.cold.temperature)) {
    spec.hot.temperature = std::nextafter(spec.cold.temperature, 5.0);
  }
  return spec;
}

GibbsSample random_gibbs_sample(Sampler& sampler) {
  GibbsSample s;
  s.params = {sampler.uniform(-5.0, 5.0), sampler.uniform(-3.0, 3.0)};
  s.temperature = sampler.uniform_left_open(0.05, 5.0);
  return s;
}

GibbsSample near_threshold_gibbs_sample(Sampler& sampler) {
  GibbsSample s;
  const double sign = sampler.coin() ? 1.0 : -1.0;
  s.params = {sign * sampler.uniform(0.1, 5.0), sampler.uniform(-3.0, 3.0)};
  const double x = arcsinh_one() + sampler.uniform(-1e-3, 1e-3);
  s.temperature = std::abs(gap(s.params)) / x;
  return s;
}

}  // namespace eqhe
