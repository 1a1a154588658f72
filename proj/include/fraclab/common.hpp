#ifndef FRACLAB_COMMON_HPP
#define FRACLAB_COMMON_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fraclab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Interior system is numerically singular: 0 sits in the Dirichlet
/// eigenvalue set of the operator pencil.
struct NearSingularError : std::runtime_error {
  explicit NearSingularError(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature range leaves more estimated tail mass than allowed.
struct QuadratureTailError : std::runtime_error {
  explicit QuadratureTailError(const std::string& what) : std::runtime_error(what) {}
};

/// A radial shell holds too few mesh cells to be quadrature-worthy.
struct InsufficientResolutionError : std::runtime_error {
  explicit InsufficientResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Experiment configuration failed schema validation.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline double relative_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

}  // namespace fraclab

#endif
