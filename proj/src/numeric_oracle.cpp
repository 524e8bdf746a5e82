#include "eqhe/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "eqhe/errors.hpp"

namespace eqhe::oracle {
namespace {

using Matrix2c = Eigen::Matrix<Complex, 2, 2>;

constexpr double kDensityTolerance = 1e-12;
// Eigenvalues closer than this (relative to the spectral radius) are one eigenspace.
constexpr double kDegeneracyTolerance = 1e-10;

// Single-spin operators in the (|0>, |1>) basis with |0> the ground state.
Matrix2c sigma_x() {
  Matrix2c m;
  m << 0.0, 1.0,
       1.0, 0.0;
  return m;
}

Matrix2c sigma_y() {
  const Complex i(0.0, 1.0);
  Matrix2c m;
  m << 0.0, i,
       -i, 0.0;
  return m;
}

// Kronecker product in the |ab> -> 2a + b ordering, then permuted to
// |00>, |11>, |01>, |10>.
Matrix4c two_spin(const Matrix2c& first, const Matrix2c& second) {
  constexpr std::array<int, 4> kPermutation{0, 3, 1, 2};
  Matrix4c standard;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          standard(2 * a + b, 2 * c + d) = first(a, c) * second(b, d);

  Matrix4c out;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) out(k, l) = standard(kPermutation[k], kPermutation[l]);
  return out;
}

// Textbook eigenvectors, used only to label the numerical ones.
std::array<Vector4c, 4> reference_vectors(double d) {
  const double theta = std::atan(d);
  const Complex phase = std::polar(1.0, theta);
  const double r = 1.0 / std::sqrt(2.0);
  std::array<Vector4c, 4> v;
  v[0] << 1.0, 0.0, 0.0, 0.0;
  v[1] << 0.0, 1.0, 0.0, 0.0;
  v[2] << 0.0, 0.0, r, r * phase;
  v[3] << 0.0, 0.0, r, -r * phase;
  return v;
}

Matrix4c hermitian_function(const Matrix4c& m, double (*f)(double)) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  Eigen::Vector4d mapped;
  for (int i = 0; i < 4; ++i) mapped(i) = f(es.eigenvalues()(i));
  return es.eigenvectors() * mapped.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Matrix4c hamiltonian(const ModelParams& params) {
  if (!std::isfinite(params.j) || !std::isfinite(params.d)) {
    throw DomainError("Hamiltonian parameters must be finite");
  }
  const Matrix2c sx = sigma_x();
  const Matrix2c sy = sigma_y();
  const Matrix4c xy_exchange = two_spin(sx, sx) + two_spin(sy, sy);
  const Matrix4c dm = two_spin(sx, sy) - two_spin(sy, sx);
  return 0.5 * params.j * (xy_exchange + params.d * dm);
}

Matrix4c spin_flip() { return two_spin(sigma_y(), sigma_y()); }

Eigensystem eigensystem(const ModelParams& params) {
  const Matrix4c h = hamiltonian(params);
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  const Eigen::Vector4d& values = es.eigenvalues();
  const Matrix4c& vectors = es.eigenvectors();

  const auto reference = reference_vectors(params.d);
  Eigen::Matrix4d overlap;
  for (int k = 0; k < 4; ++k)
    for (int m = 0; m < 4; ++m) overlap(k, m) = std::norm(vectors.col(m).dot(reference[k]));

  // Greedy assignment: repeatedly take the largest remaining overlap.
  std::array<int, 4> assigned{-1, -1, -1, -1};
  std::array<bool, 4> used{};
  for (int round = 0; round < 4; ++round) {
    double best = -1.0;
    int best_k = -1;
    int best_m = -1;
    for (int k = 0; k < 4; ++k) {
      if (assigned[k] >= 0) continue;
      for (int m = 0; m < 4; ++m) {
        if (!used[m] && overlap(k, m) > best) {
          best = overlap(k, m);
          best_k = k;
          best_m = m;
        }
      }
    }
    assigned[best_k] = best_m;
    used[best_m] = true;
  }

  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  Eigensystem out;
  for (int k = 0; k < 4; ++k) {
    const double energy = values(assigned[k]);
    out.energies[k] = energy;
    // Project the reference vector onto the eigenspace of `energy`; this
    // fixes the phase and resolves degenerate subspaces.
    Vector4c projected = Vector4c::Zero();
    for (int m = 0; m < 4; ++m) {
      if (std::abs(values(m) - energy) <= kDegeneracyTolerance * scale) {
        projected += vectors.col(m) * vectors.col(m).dot(reference[k]);
      }
    }
    out.vectors.col(k) = projected / projected.norm();
  }
  return out;
}

Spectrum diagonalize(const ModelParams& params) {
  const Eigensystem sys = eigensystem(params);
  Spectrum s;
  s.energies = sys.energies;
  s.theta = std::arg(sys.vectors(3, 2) / sys.vectors(2, 2));
  return s;
}

DensityMatrix4::DensityMatrix4(const Matrix4c& entries) : entries_(entries) {
  if (!entries.allFinite()) throw DomainError("density matrix has non-finite entries");
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    throw DomainError("density matrix is not Hermitian");
  }
  const Complex trace = entries.trace();
  if (std::abs(trace.real() - 1.0) > kDensityTolerance ||
      std::abs(trace.imag()) > kDensityTolerance) {
    throw DomainError("density matrix does not have unit trace");
  }
  const Matrix4c hermitian = 0.5 * (entries + entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(hermitian, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kDensityTolerance) {
    throw DomainError("density matrix is not positive semidefinite");
  }
}

std::array<double, 4> gibbs_weights(const std::array<double, 4>& energies, double temperature) {
  if (!std::isfinite(temperature) || temperature <= 0.0) {
    throw DomainError("temperature must be positive and finite");
  }
  const double ground = *std::min_element(energies.begin(), energies.end());
  std::array<double, 4> w{};
  double z = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    w[i] = std::exp(-(energies[i] - ground) / temperature);
    z += w[i];
  }
  for (double& x : w) x /= z;
  return w;
}

DensityMatrix4 gibbs_density_matrix(const ModelParams& params, double temperature) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(hamiltonian(params));
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  std::array<double, 4> levels{};
  for (int i = 0; i < 4; ++i) levels[i] = es.eigenvalues()(i);
  const auto weights = gibbs_weights(levels, temperature);
  Eigen::Vector4d diag(weights[0], weights[1], weights[2], weights[3]);
  return DensityMatrix4(es.eigenvectors() * diag.cast<Complex>().asDiagonal() *
                        es.eigenvectors().adjoint());
}

DensityMatrix4 gibbs_projector_sum(const ModelParams& params, double temperature) {
  const Eigensystem sys = eigensystem(params);
  const auto weights = gibbs_weights(sys.energies, temperature);
  Matrix4c rho = Matrix4c::Zero();
  for (int k = 0; k < 4; ++k) {
    rho += weights[k] * sys.vectors.col(k) * sys.vectors.col(k).adjoint();
  }
  return DensityMatrix4(rho);
}

DensityMatrix4 projector(const Vector4c& state) {
  const Vector4c v = state / state.norm();
  return DensityMatrix4(v * v.adjoint());
}

double wootters_concurrence(const DensityMatrix4& rho) {
  const Matrix4c& m = rho.entries();
  const Matrix4c sqrt_rho =
      hermitian_function(0.5 * (m + m.adjoint()), [](double x) { return std::sqrt(std::max(x, 0.0)); });
  // rho~ = Y rho* Y with Y real, symmetric and involutive, so
  // sqrt(rho~) = Y conj(sqrt(rho)) Y.
  const Matrix4c y = spin_flip();
  const Matrix4c sqrt_flipped = y * sqrt_rho.conjugate() * y;
  Eigen::JacobiSVD<Matrix4c> svd(sqrt_rho * sqrt_flipped);
  const Eigen::Vector4d s = svd.singularValues();  // descending
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

CycleResult simulate_cycle(const CycleSpec& spec) {
  validate(spec);
  const Eigensystem hot = eigensystem(spec.hot.model);
  const Eigensystem cold = eigensystem(spec.cold.model);
  const auto p_hot = gibbs_weights(hot.energies, spec.hot.temperature);
  const auto p_cold = gibbs_weights(cold.energies, spec.cold.temperature);

  CycleResult r;
  for (std::size_t i = 0; i < 4; ++i) {
    r.q_h += hot.energies[i] * (p_hot[i] - p_cold[i]);
    r.q_l += cold.energies[i] * (p_cold[i] - p_hot[i]);
  }
  r.w = r.q_h + r.q_l;
  r.eta_carnot = 1.0 - spec.cold.temperature / spec.hot.temperature;
  r.regime = classify_cycle(r.q_h, r.q_l, r.w);
  if (r.regime != CycleCase::kTrivial && r.q_h != 0.0) r.work_ratio = r.w / r.q_h;
  if (r.regime == CycleCase::kEngine) r.eta = r.work_ratio;
  return r;
}

}  // namespace eqhe::oracle
