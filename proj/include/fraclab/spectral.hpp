#ifndef FRACLAB_SPECTRAL_HPP
#define FRACLAB_SPECTRAL_HPP

#include <functional>

#include "fraclab/assembly.hpp"

namespace fraclab {

/// Gamma(-s) = -Gamma(1-s)/s, negative for s in (0,1).
double gamma_minus_s(double s);

/// Eigenpairs of the mass-weighted operator: columns of vectors() are
/// orthonormal in the M-inner product and eigenvalues are ascending with
/// near-zero values clamped to exactly zero.
class SpectralDecomposition {
 public:
  SpectralDecomposition(Vector eigenvalues, Matrix vectors, Vector mass);

  const Vector& eigenvalues() const { return eigenvalues_; }
  const Matrix& vectors() const { return vectors_; }
  const Vector& mass() const { return mass_; }
  Index size() const { return eigenvalues_.size(); }

  double lambda_max() const { return eigenvalues_(eigenvalues_.size() - 1); }
  /// Smallest strictly positive eigenvalue.
  double lambda_positive_min() const;
  bool has_zero_mode() const { return eigenvalues_(0) == 0.0; }

  /// Expansion coefficients V^T M u.
  Vector coefficients(const Vector& u) const;
  Vector synthesize(const Vector& coef) const { return vectors_ * coef; }

  /// Kernel-form matrix V diag(c) V^T; pairs with mass weights on the right.
  Matrix kernel_form(const Vector& diag_values) const;

 private:
  Vector eigenvalues_;
  Matrix vectors_;
  Vector mass_;
};

SpectralDecomposition eigendecompose(const DiscreteEllipticOperator& op);

Vector apply_spectral_function(const SpectralDecomposition& decomp,
                               const std::function<double(double)>& phi, const Vector& u);

/// Dense fractional power S = V diag(lambda^s) V^T M together with the
/// extracted nonlocal kernel K(i,j) = -(M S)_ij / (m_i m_j) and the killing
/// weights kappa (zero under reflecting truncation) that close the
/// Dirichlet-form identity under absorbing truncation.
struct FractionalOperator {
  double s = 0.0;
  Vector mass;
  Matrix matrix;    // S
  Matrix weighted;  // M S, symmetric
  Matrix kernel;    // K, zero diagonal
  Vector kappa;
  double lambda_min = 0.0;

  Index size() const { return mass.size(); }
  Vector apply(const Vector& u) const { return matrix * u; }
  /// <S f, g>_M.
  double dirichlet_pairing(const Vector& f, const Vector& g) const;
};

FractionalOperator fractional_power(const SpectralDecomposition& decomp, double s);

/// Heat kernel p_t(i,j) so that (e^{-tL} f)_i = sum_j p_t(i,j) f_j m_j.
Matrix heat_kernel(const SpectralDecomposition& decomp, double t);

struct HeatQuadrature {
  double t_min = 1e-6;
  double t_max = 1e6;
  int nodes = 400;
};

/// Nonlocal kernel recovered from the heat semigroup by log-trapezoid
/// quadrature of (e^{-tL} - Id) t^{-1-s} with analytic tail corrections;
/// cross-checks the kernel extracted from the spectral power.
Matrix kernel_from_heat(const SpectralDecomposition& decomp, double s, const HeatQuadrature& quad);

}  // namespace fraclab

#endif
