#pragma once

// Four-stroke quantum Otto cycle on the two-spin DM working substance.
//
//   <1> hot isochore:  equilibrate with T_h under (J1, D1), occupations -> p1
//   <2> adiabat:       (J1, D1) -> (J2, D2), occupations frozen at p1
//   <3> cold isochore: equilibrate with T_l under (J2, D2), occupations -> p2
//   <4> adiabat:       (J2, D2) -> (J1, D1), occupations frozen at p2
//
// Heat is sum_i E_i dp_i, work is sum_i p_i dE_i. Q_h and Q_l are positive
// when absorbed by the working substance; W is the net work delivered by
// the engine, W = Q_h + Q_l.

#include <optional>
#include <span>
#include <string_view>

#include "eqhe/spin_model.hpp"

namespace eqhe {

struct BathStage {
  ModelParams model;
  double temperature = 0.0;
};

struct CycleSpec {
  BathStage hot;   // (J1, D1, T_h)
  BathStage cold;  // (J2, D2, T_l)
};

enum class CycleCase {
  kEngine,          // Q_h > -Q_l > 0
  kTrivial,         // Q_h = Q_l = W = 0
  kNonEngine,       // W <= 0
  kColdBathDriven,  // W > 0 with Q_l > -Q_h > 0
  kBothAbsorb,      // W > 0 with Q_h > 0 and Q_l > 0
};

std::string_view to_string(CycleCase c);

struct CycleResult {
  double q_h = 0.0;
  double q_l = 0.0;
  double w = 0.0;
  std::optional<double> eta;         // set only for kEngine
  std::optional<double> work_ratio;  // W / Q_h for any non-trivial cycle; diagnostic only
  double eta_carnot = 0.0;
  CycleCase regime = CycleCase::kTrivial;
};

// |Q_h| and |Q_l| at or below this are treated as zero when classifying.
inline constexpr double kTrivialTolerance = 1e-12;

// Sorts (Q_h, Q_l, W) into one of the CycleCase buckets.
CycleCase classify_cycle(double q_h, double q_l, double w);

// Throws ConfigError unless T_h > T_l > 0, both couplings are non-zero and
// of the same sign, and all parameters are finite.
void validate(const CycleSpec& spec);

// sum_i E_i (p_after_i - p_before_i) over a stroke with fixed levels.
double stroke_heat(std::span<const double, 4> energies,
                   std::span<const double, 4> p_before,
                   std::span<const double, 4> p_after);

// sum_i p_i (E_after_i - E_before_i): work done ON the system while the
// occupations are frozen.
double stroke_work(std::span<const double, 4> probabilities,
                   std::span<const double, 4> energies_before,
                   std::span<const double, 4> energies_after);

// Closed-form cycle:
//   Q_h = e1 (tanh(e2/2T_l) - tanh(e1/2T_h))
//   Q_l = e2 (tanh(e1/2T_h) - tanh(e2/2T_l))
//   W   = (e2 - e1)(tanh(e1/2T_h) - tanh(e2/2T_l))
// with e_k = J_k sqrt(1 + D_k^2). On kEngine, eta = 1 - e2/e1.
CycleResult run_cycle(const CycleSpec& spec);

// The same cycle assembled stroke by stroke from Gibbs occupations.
struct StrokeLedger {
  double heat_hot = 0.0;       // stroke <1>
  double work_on_expand = 0.0;  // stroke <2>, on the system
  double heat_cold = 0.0;      // stroke <3>
  double work_on_compress = 0.0;  // stroke <4>, on the system

  // Net work delivered by the engine.
  double work_out() const { return -(work_on_expand + work_on_compress); }
};

StrokeLedger trace_strokes(const CycleSpec& spec);

enum class PositiveWork { kHolds, kFails, kOutOfRegime };

// e1/T_h < e2/T_l, only meaningful for 0 < e2 < e1; any other spec reports
// kOutOfRegime.
PositiveWork positive_work_condition(const CycleSpec& spec);

// 1 - e2/e1, independent of the bath temperatures. Throws DomainError for e1 = 0.
double efficiency(const CycleSpec& spec);

// 1 - T_l/T_h. T_h = T_l returns 0; T_h < T_l throws ConfigError.
double carnot_efficiency(double th, double tl);

}  // namespace eqhe
