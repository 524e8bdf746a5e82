#pragma once

// Brute-force verification path. Everything here is built from explicit 4x4
// complex matrices and a general Hermitian eigensolver; none of the
// closed-form spectrum, occupation, concurrence or cycle expressions are
// reused.
//
// Two-spin basis order: |00>, |11>, |01>, |10>, where |0> is the single-spin
// ground state (sigma_z|0> = -|0>) and sigma_+ = |1><0|.

#include <array>
#include <complex>

#include <Eigen/Core>

#include "eqhe/otto_engine.hpp"
#include "eqhe/spin_model.hpp"

namespace eqhe::oracle {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;

// H = (J/2)[sx sx + sy sy + D (sx sy - sy sx)], assembled from Pauli
// Kronecker products and permuted into the basis above.
Matrix4c hamiltonian(const ModelParams& params);

// sigma_y (x) sigma_y in the same basis.
Matrix4c spin_flip();

// Eigenvalues and orthonormal eigenvectors labelled Psi1..Psi4. Labels are
// assigned by projecting the textbook eigenvectors onto the numerical
// eigenspaces, which also fixes each vector's phase.
struct Eigensystem {
  std::array<double, 4> energies{};
  Matrix4c vectors;  // column k is Psi_{k+1}
};

Eigensystem eigensystem(const ModelParams& params);

// Energies in Psi1..Psi4 order; theta is read off the relative phase of
// the |10> and |01> amplitudes of Psi3.
Spectrum diagonalize(const ModelParams& params);

// Validated two-qubit density matrix.
class DensityMatrix4 {
 public:
  // Throws DomainError unless Hermitian within 1e-12, unit trace within
  // 1e-12 and no eigenvalue below -1e-12.
  explicit DensityMatrix4(const Matrix4c& entries);

  const Matrix4c& entries() const { return entries_; }

 private:
  Matrix4c entries_;
};

// e^{-beta H}/Z built from the raw eigen-decomposition of H.
DensityMatrix4 gibbs_density_matrix(const ModelParams& params, double temperature);

// sum_i p_i |Psi_i><Psi_i| with the labelled eigenvectors.
DensityMatrix4 gibbs_projector_sum(const ModelParams& params, double temperature);

// Boltzmann weights over the numerically computed levels, Psi1..Psi4 order.
std::array<double, 4> gibbs_weights(const std::array<double, 4>& energies, double temperature);

// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i are the
// decreasing square roots of the eigenvalues of rho (sy sy) rho* (sy sy).
// The l_i are evaluated as singular values of sqrt(rho) sqrt(rho~) so that
// small ones are not squared and re-rooted.
double wootters_concurrence(const DensityMatrix4& rho);

// Density matrix of a pure state.
DensityMatrix4 projector(const Vector4c& state);

// Direct summation over numerically diagonalized levels:
//   Q_h = sum E_i1 (p_i1 - p_i2), Q_l = sum E_i2 (p_i2 - p_i1).
// Throws ConfigError on an invalid spec.
CycleResult simulate_cycle(const CycleSpec& spec);

}  // namespace eqhe::oracle
