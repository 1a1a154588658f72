#ifndef FRACLAB_GRID_HPP
#define FRACLAB_GRID_HPP

#include <functional>
#include <vector>

#include "fraclab/common.hpp"

namespace fraclab {

/// How the truncated box edge behaves. Reflecting (zero co-normal flux)
/// keeps the discrete heat kernel mass-conserving; absorbing pins a zero
/// ghost value one spacing outside the box.
enum class BoundaryTag { Reflecting, Absorbing };

/// Tensor-product grid on [-Lbox, Lbox]^n, n in {1,2}, standing in for R^n.
/// Node masses are trapezoidal cell volumes, so sum(mass) equals the box
/// volume exactly and the mass matrix is diagonal.
class Grid {
 public:
  Grid(int n, double lbox, int points_per_axis, BoundaryTag bc);

  int dim() const { return n_; }
  double lbox() const { return lbox_; }
  int points_per_axis() const { return npts_; }
  double spacing() const { return h_; }
  BoundaryTag boundary() const { return bc_; }

  Index num_nodes() const { return mass_.size(); }
  const Vector& mass() const { return mass_; }
  double box_volume() const;

  /// Physical coordinates of node i; the second component is 0 for n = 1.
  Eigen::Vector2d node(Index i) const;

  /// Lexicographic index helpers (node = ix * N + iy for n = 2).
  Index node_index(int ix, int iy = 0) const;
  int axis_index(Index node, int axis) const;
  bool on_truncation_boundary(Index node) const;

 private:
  int n_;
  double lbox_;
  int npts_;
  double h_;
  BoundaryTag bc_;
  Vector mass_;
};

Grid build_grid(int n, double lbox, int points_per_axis, BoundaryTag bc);

/// Axis-aligned region: half-open coordinate box [lo, hi) or open ball.
struct RegionSpec {
  enum class Kind { Box, Ball };
  Kind kind = Kind::Box;
  Eigen::Vector2d lo = Eigen::Vector2d::Zero();
  Eigen::Vector2d hi = Eigen::Vector2d::Zero();
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double radius = 0.0;

  static RegionSpec box(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi);
  static RegionSpec box1d(double lo, double hi);
  static RegionSpec ball(const Eigen::Vector2d& center, double radius);
  static RegionSpec ball1d(double center, double radius);
  static RegionSpec all();

  bool contains(const Eigen::Vector2d& x, int n) const;
};

/// Index partition of the grid into interior Omega, exterior Omega_e and
/// the two exterior control/measurement regions.
struct DomainPartition {
  std::vector<Index> omega;
  std::vector<Index> exterior;
  std::vector<Index> o1;
  std::vector<Index> o2;
  std::vector<char> in_omega;  // size num_nodes

  Index num_nodes() const { return static_cast<Index>(in_omega.size()); }
};

DomainPartition partition_domain(const Grid& grid, const RegionSpec& omega_spec,
                                 const RegionSpec* o1_spec = nullptr,
                                 const RegionSpec* o2_spec = nullptr);

/// Pointwise matrix-valued coefficient A(x); only the leading n-by-n block
/// of the returned 2x2 matrix is read for n = 1.
struct CoefficientSpec {
  std::function<Eigen::Matrix2d(const Eigen::Vector2d&)> eval;
  double declared_lambda = 0.0;  // optional ellipticity bound for full-matrix specs

  static CoefficientSpec identity();
  static CoefficientSpec isotropic(std::function<double(const Eigen::Vector2d&)> a);
  static CoefficientSpec diagonal(std::function<double(const Eigen::Vector2d&)> a11,
                                  std::function<double(const Eigen::Vector2d&)> a22);
  static CoefficientSpec full(std::function<double(const Eigen::Vector2d&)> a11,
                              std::function<double(const Eigen::Vector2d&)> a22,
                              std::function<double(const Eigen::Vector2d&)> a12,
                              double declared_lambda);
};

/// Node samples of A(x) with the global ellipticity constant Lambda such
/// that all node eigenvalues lie in [1/Lambda, Lambda].
struct CoefficientField {
  int n = 1;
  std::vector<Eigen::Matrix2d> a;  // n-by-n in the top-left block
  double lambda_bound = 1.0;
  double min_eigenvalue = 1.0;
  double max_eigenvalue = 1.0;

  bool is_identity() const;
  bool is_diagonal() const;
};

CoefficientField sample_coefficient(const Grid& grid, const CoefficientSpec& spec);

}  // namespace fraclab

#endif
