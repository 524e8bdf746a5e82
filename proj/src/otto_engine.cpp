#include "eqhe/otto_engine.hpp"

#include <cmath>
#include <string>

#include "eqhe/errors.hpp"

namespace eqhe {
namespace {

constexpr double kNormalizationTolerance = 1e-10;

void require_normalized(std::span<const double, 4> p, const char* what) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " has a non-finite entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw DomainError(std::string(what) + " is not normalized");
  }
}

// tanh(a) - tanh(b) = sinh(a - b) / (cosh a cosh b), evaluated with the
// e^{|a|+|b|} growth of the denominator factored out. Stays accurate when
// both arguments saturate tanh.
double tanh_difference(double a, double b) {
  const double delta = a - b;
  const double s = std::abs(a) + std::abs(b);
  const double denom = (1.0 + std::exp(-2.0 * std::abs(a))) * (1.0 + std::exp(-2.0 * std::abs(b)));
  double numer = 0.0;
  if (std::abs(delta) < 1.0) {
    numer = 2.0 * std::exp(-s) * std::sinh(delta);
  } else {
    numer = std::exp(delta - s) - std::exp(-delta - s);  // both exponents <= 0
  }
  return 2.0 * numer / denom;
}

}  // namespace

std::string_view to_string(CycleCase c) {
  switch (c) {
    case CycleCase::kEngine: return "engine";
    case CycleCase::kTrivial: return "trivial";
    case CycleCase::kNonEngine: return "non-engine";
    case CycleCase::kColdBathDriven: return "cold-bath-driven";
    case CycleCase::kBothAbsorb: return "both-absorb";
  }
  return "unknown";
}

CycleCase classify_cycle(double q_h, double q_l, double w) {
  if (std::abs(q_h) <= kTrivialTolerance && std::abs(q_l) <= kTrivialTolerance) {
    return CycleCase::kTrivial;
  }
  if (!(w > 0.0)) return CycleCase::kNonEngine;
  if (q_h > 0.0 && q_l < 0.0 && q_h > -q_l) return CycleCase::kEngine;
  if (q_h < 0.0 && q_l > 0.0) return CycleCase::kColdBathDriven;
  return CycleCase::kBothAbsorb;
}

void validate(const CycleSpec& spec) {
  const double th = spec.hot.temperature;
  const double tl = spec.cold.temperature;
  if (!std::isfinite(th) || !std::isfinite(tl) || !(tl > 0.0)) {
    throw ConfigError("bath temperatures must be positive and finite");
  }
  if (!(th > tl)) {
    throw ConfigError("bath temperatures must satisfy Th > Tl");
  }
  const double j1 = spec.hot.model.j;
  const double j2 = spec.cold.model.j;
  if (!std::isfinite(j1) || !std::isfinite(j2) || !std::isfinite(spec.hot.model.d) ||
      !std::isfinite(spec.cold.model.d)) {
    throw ConfigError("couplings and DM strengths must be finite");
  }
  if (j1 == 0.0 || j2 == 0.0) {
    throw ConfigError("couplings J1 and J2 must be non-zero");
  }
  if ((j1 > 0.0) != (j2 > 0.0)) {
    throw ConfigError("couplings J1 and J2 must share the same sign (mixed AFM/FM cycle)");
  }
}

double stroke_heat(std::span<const double, 4> energies,
                   std::span<const double, 4> p_before,
                   std::span<const double, 4> p_after) {
  require_normalized(p_before, "initial occupation vector");
  require_normalized(p_after, "final occupation vector");
  double q = 0.0;
  for (std::size_t i = 0; i < 4; ++i) q += energies[i] * (p_after[i] - p_before[i]);
  return q;
}

double stroke_work(std::span<const double, 4> probabilities,
                   std::span<const double, 4> energies_before,
                   std::span<const double, 4> energies_after) {
  require_normalized(probabilities, "occupation vector");
  double w = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    w += probabilities[i] * (energies_after[i] - energies_before[i]);
  }
  return w;
}

CycleResult run_cycle(const CycleSpec& spec) {
  validate(spec);
  const double e1 = gap(spec.hot.model);
  const double e2 = gap(spec.cold.model);
  // tanh(e2/2T_l) - tanh(e1/2T_h)
  const double spread = tanh_difference(e2 / (2.0 * spec.cold.temperature),
                                        e1 / (2.0 * spec.hot.temperature));

  CycleResult r;
  r.q_h = e1 * spread;
  r.q_l = -e2 * spread;
  r.w = r.q_h + r.q_l;
  r.eta_carnot = carnot_efficiency(spec.hot.temperature, spec.cold.temperature);
  r.regime = classify_cycle(r.q_h, r.q_l, r.w);
  if (r.regime == CycleCase::kEngine) r.eta = 1.0 - e2 / e1;
  if (r.regime != CycleCase::kTrivial && r.q_h != 0.0) r.work_ratio = r.w / r.q_h;
  return r;
}

StrokeLedger trace_strokes(const CycleSpec& spec) {
  validate(spec);
  const Levels e_hot = spectrum(spec.hot.model).energies;
  const Levels e_cold = spectrum(spec.cold.model).energies;
  const Levels p_hot = gibbs_occupations(spec.hot.model, spec.hot.temperature).probabilities;
  const Levels p_cold = gibbs_occupations(spec.cold.model, spec.cold.temperature).probabilities;

  // Stroke <4> leaves the system with the cold occupations, so they are the
  // starting point of stroke <1>.
  StrokeLedger ledger;
  ledger.heat_hot = stroke_heat(e_hot, p_cold, p_hot);
  ledger.work_on_expand = stroke_work(p_hot, e_hot, e_cold);
  ledger.heat_cold = stroke_heat(e_cold, p_hot, p_cold);
  ledger.work_on_compress = stroke_work(p_cold, e_cold, e_hot);
  return ledger;
}

PositiveWork positive_work_condition(const CycleSpec& spec) {
  validate(spec);
  const double e1 = gap(spec.hot.model);
  const double e2 = gap(spec.cold.model);
  if (!(0.0 < e2 && e2 < e1)) return PositiveWork::kOutOfRegime;
  return e1 / spec.hot.temperature < e2 / spec.cold.temperature ? PositiveWork::kHolds
                                                                  : PositiveWork::kFails;
}

double efficiency(const CycleSpec& spec) {
  const double e1 = gap(spec.hot.model);
  const double e2 = gap(spec.cold.model);
  if (e1 == 0.0) throw DomainError("efficiency undefined for a zero hot-stage gap");
  return 1.0 - e2 / e1;
}

double carnot_efficiency(double th, double tl) {
  if (!std::isfinite(th) || !std::isfinite(tl) || !(tl > 0.0)) {
    throw ConfigError("bath temperatures must be positive and finite");
  }
  if (th < tl) throw ConfigError("bath temperatures must satisfy Th >= Tl");
  return 1.0 - tl / th;
}

}  // namespace eqhe
