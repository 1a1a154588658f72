#include "fraclab/spectral.hpp"

#include <cmath>

namespace fraclab {

double gamma_minus_s(double s) { return -std::tgamma(1.0 - s) / s; }

SpectralDecomposition::SpectralDecomposition(Vector eigenvalues, Matrix vectors, Vector mass)
    : eigenvalues_(std::move(eigenvalues)), vectors_(std::move(vectors)), mass_(std::move(mass)) {}

double SpectralDecomposition::lambda_positive_min() const {
  for (Index k = 0; k < eigenvalues_.size(); ++k)
    if (eigenvalues_(k) > 0.0) return eigenvalues_(k);
  return 0.0;
}

Vector SpectralDecomposition::coefficients(const Vector& u) const {
  return vectors_.transpose() * mass_.cwiseProduct(u);
}

Matrix SpectralDecomposition::kernel_form(const Vector& diag_values) const {
  Matrix k = vectors_ * diag_values.asDiagonal() * vectors_.transpose();
  return 0.5 * (k + k.transpose());
}

SpectralDecomposition eigendecompose(const DiscreteEllipticOperator& op) {
  const Matrix& w = op.weighted();
  const double scale = w.cwiseAbs().maxCoeff();
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw std::runtime_error("eigendecompose: weighted operator is not symmetric");

  const Vector isqrt = op.mass().cwiseSqrt().cwiseInverse();
  Matrix b = isqrt.asDiagonal() * w * isqrt.asDiagonal();
  b = 0.5 * (b + b.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(b);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: eigensolver failed");

  Vector lambda = solver.eigenvalues();
  const double lmax = std::max(1.0, lambda(lambda.size() - 1));
  const double clamp_tol = 1e-12 * lmax;
  for (Index k = 0; k < lambda.size(); ++k) {
    if (lambda(k) < -1e-10 * lmax)
      throw std::runtime_error("eigendecompose: operator has a significantly negative eigenvalue");
    if (std::abs(lambda(k)) <= clamp_tol) lambda(k) = 0.0;
  }
  Matrix v = isqrt.asDiagonal() * solver.eigenvectors();
  return SpectralDecomposition(std::move(lambda), std::move(v), op.mass());
}

Vector apply_spectral_function(const SpectralDecomposition& decomp,
                               const std::function<double(double)>& phi, const Vector& u) {
  Vector coef = decomp.coefficients(u);
  for (Index k = 0; k < coef.size(); ++k) {
    const double value = phi(decomp.eigenvalues()(k));
    if (!std::isfinite(value))
      throw std::invalid_argument("apply_spectral_function: phi is not finite on the spectrum");
    coef(k) *= value;
  }
  return decomp.synthesize(coef);
}

double FractionalOperator::dirichlet_pairing(const Vector& f, const Vector& g) const {
  return g.dot(weighted * f);
}

FractionalOperator fractional_power(const SpectralDecomposition& decomp, double s) {
  if (!(s > 0.0 && s <= 1.0))
    throw std::invalid_argument("fractional_power: s must lie in (0,1]");
  const Index n = decomp.size();
  Vector powered(n);
  for (Index k = 0; k < n; ++k)
    powered(k) = decomp.eigenvalues()(k) == 0.0 ? 0.0 : std::pow(decomp.eigenvalues()(k), s);

  FractionalOperator frac;
  frac.s = s;
  frac.mass = decomp.mass();
  frac.lambda_min = decomp.eigenvalues()(0);

  const Matrix mv = frac.mass.asDiagonal() * decomp.vectors();
  Matrix ms = mv * powered.asDiagonal() * mv.transpose();
  ms = 0.5 * (ms + ms.transpose());
  frac.weighted = ms;
  frac.matrix = frac.mass.cwiseInverse().asDiagonal() * ms;

  frac.kernel = Matrix::Zero(n, n);
  frac.kappa = Vector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    double rowsum = ms(i, i);
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      frac.kernel(i, j) = -ms(i, j) / (frac.mass(i) * frac.mass(j));
      rowsum += ms(i, j);
    }
    frac.kappa(i) = rowsum / frac.mass(i);
  }
  return frac;
}

Matrix heat_kernel(const SpectralDecomposition& decomp, double t) {
  if (t < 0.0) throw std::invalid_argument("heat_kernel: t must be nonnegative");
  Vector damp(decomp.size());
  for (Index k = 0; k < decomp.size(); ++k) damp(k) = std::exp(-t * decomp.eigenvalues()(k));
  return decomp.kernel_form(damp);
}

Matrix kernel_from_heat(const SpectralDecomposition& decomp, double s, const HeatQuadrature& quad) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("kernel_from_heat: s must lie in (0,1)");
  if (!(quad.t_min > 0.0 && quad.t_max > quad.t_min && quad.nodes >= 2))
    throw std::invalid_argument("kernel_from_heat: bad quadrature range");
  const double gneg = gamma_minus_s(s);

  // Per mode, integral of (e^{-t lambda} - 1) t^{-1-s}: log-trapezoid over
  // [t_min, t_max], series tail below t_min, closed-form -t_max^{-s}/s plus
  // an exponentially small remainder above t_max.
  auto mode_integral = [&](double lambda) {
    if (lambda == 0.0) return 0.0;
    const double lmin = std::log(quad.t_min);
    const double step = (std::log(quad.t_max) - lmin) / (quad.nodes - 1);
    double acc = 0.0;
    for (int i = 0; i < quad.nodes; ++i) {
      const double t = std::exp(lmin + i * step);
      const double f = std::expm1(-t * lambda) * std::pow(t, -s);
      acc += (i == 0 || i == quad.nodes - 1) ? 0.5 * f : f;
    }
    acc *= step;
    acc += -lambda * std::pow(quad.t_min, 1.0 - s) / (1.0 - s) +
           lambda * lambda * std::pow(quad.t_min, 2.0 - s) / (2.0 * (2.0 - s)) -
           lambda * lambda * lambda * std::pow(quad.t_min, 3.0 - s) / (6.0 * (3.0 - s));
    acc += -std::pow(quad.t_max, -s) / s;
    acc += std::exp(-lambda * quad.t_max) * std::pow(quad.t_max, -1.0 - s) /
           (lambda + (1.0 + s) / quad.t_max);
    return acc;
  };

  // Tail-mass estimate at the spectral extremes relative to |Gamma(-s)| lambda^s.
  auto tail_estimate = [&](double lambda) {
    if (lambda == 0.0) return 0.0;
    const double low = std::pow(lambda, 4) * std::pow(quad.t_min, 4.0 - s) / (24.0 * (4.0 - s));
    const double high = std::exp(-lambda * quad.t_max) * std::pow(quad.t_max, -s) / s;
    return (low + high) / (std::abs(gneg) * std::pow(lambda, s));
  };
  const double lpos = decomp.lambda_positive_min();
  if (lpos > 0.0 && std::max(tail_estimate(lpos), tail_estimate(decomp.lambda_max())) > 0.01)
    throw QuadratureTailError("kernel_from_heat: quadrature range leaves > 1% tail mass");

  Vector coef(decomp.size());
  for (Index k = 0; k < decomp.size(); ++k)
    coef(k) = mode_integral(decomp.eigenvalues()(k)) / gneg;
  Matrix kf = decomp.kernel_form(coef);
  Matrix kernel = -kf;
  kernel.diagonal().setZero();
  return kernel;
}

}  // namespace fraclab
