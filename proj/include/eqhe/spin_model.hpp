#pragma once

// Closed-form physics of one two-spin XX system with a z-axis
// Dzyaloshinski-Moriya term,
//
//   H = J [(1 + iD) s1+ s2- + (1 - iD) s1- s2+],
//
// in units with k_B = 1. Eigenstates are kept in the fixed order
//   Psi1 = |00>, Psi2 = |11>,
//   Psi3 = (|01> + e^{i theta}|10>)/sqrt2, Psi4 = (|01> - e^{i theta}|10>)/sqrt2,
// with energies (0, 0, eps, -eps), eps = J sqrt(1 + D^2) and theta = arctan D.
// The order is by eigenstate identity, not by energy, so occupation
// vectors from different strokes line up index by index.

#include <array>

namespace eqhe {

using Levels = std::array<double, 4>;

struct ModelParams {
  double j = 0.0;  // exchange coupling; > 0 antiferromagnetic, < 0 ferromagnetic
  double d = 0.0;  // DM strength along z
};

enum class CouplingBranch { kAntiferromagnetic, kFerromagnetic };

struct Spectrum {
  Levels energies{};  // Psi1..Psi4 order
  double theta = 0.0;
};

struct ThermalState {
  double temperature = 0.0;
  double beta = 0.0;
  double partition = 0.0;  // 2 + 2 cosh(beta eps); overflows to +inf past beta|eps| ~ 710
  Levels probabilities{};  // Psi1..Psi4 order
};

// ln(1 + sqrt2), the scaled gap |eps|/T at which thermal entanglement dies.
double arcsinh_one();

// eps = j sqrt(1 + d^2). Throws DomainError on non-finite input.
double gap(const ModelParams& params);

Spectrum spectrum(const ModelParams& params);

// Boltzmann occupations over the fixed-order spectrum. The probabilities are
// evaluated with the ground energy shifted out, so they stay finite even when
// `partition` overflows. Throws DomainError for temperature <= 0.
ThermalState gibbs_occupations(const ModelParams& params, double temperature);

// Thermal concurrence: (sinh x - 1)/(cosh x + 1) for x = |eps|/T > arcsinh(1),
// exactly 0 otherwise (including the threshold itself).
double concurrence(const ModelParams& params, double temperature);

// Concurrence as a function of the scaled gap x = |eps|/T alone.
double concurrence_of_scaled_gap(double x);

double critical_temperature(const ModelParams& params);

// L(c) = ln(((1 + c) + sqrt(2(1 + c))) / (1 - c)): the scaled gap |eps|/T at
// which the thermal concurrence equals c. L(0) = arcsinh(1). Throws
// DomainError unless 0 <= c < 1.
double scaled_gap_from_concurrence(double c);

// Coupling J that produces concurrence c at temperature T for DM strength d:
// J = +-(T / sqrt(1 + d^2)) L(c), positive on the antiferromagnetic branch.
// c = 0 returns the threshold coupling.
double coupling_from_concurrence(double c, double d, double temperature,
                                 CouplingBranch branch);

}  // namespace eqhe
