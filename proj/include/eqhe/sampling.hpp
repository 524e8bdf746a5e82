#pragma once

#include <cstdint>
#include <random>

#include "eqhe/otto_engine.hpp"
#include "eqhe/spin_model.hpp"

namespace eqhe {

// mt19937_64 with a hand-rolled uniform mapping, so a given seed produces the
// same stream on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Uniform in (lo, hi].
  double uniform_left_open(double lo, double hi);

  bool coin();

 private:
  std::mt19937_64 engine_;
};

struct GibbsSample {
  ModelParams params;
  double temperature = 0.0;
};

// j in +-[0.1, 5] with a shared sign, d in [-3, 3], T_l in (0.05, 3],
// T_h in (T_l, 5].
CycleSpec random_cycle_spec(Sampler& sampler);

// j in [-5, 5], d in [-3, 3], T in (0.05, 5].
GibbsSample random_gibbs_sample(Sampler& sampler);

// |j| in [0.1, 5], d in [-3, 3], and T chosen so the scaled gap |eps|/T lies within +-1e-3 of arcsinh(1).
GibbsSample near_threshold_gibbs_sample(Sampler& sampler);

}  // namespace eqhe
