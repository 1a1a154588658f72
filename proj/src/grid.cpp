#include "fraclab/grid.hpp"

#include <cmath>
#include <limits>

namespace fraclab {

Grid::Grid(int n, double lbox, int points_per_axis, BoundaryTag bc)
    : n_(n), lbox_(lbox), npts_(points_per_axis), bc_(bc) {
  if (n != 1 && n != 2) throw std::invalid_argument("grid: dimension must be 1 or 2");
  if (points_per_axis < 3) throw std::invalid_argument("grid: need at least 3 points per axis");
  if (!(lbox > 0.0)) throw std::invalid_argument("grid: Lbox must be positive");
  h_ = 2.0 * lbox / static_cast<double>(points_per_axis - 1);

  // Trapezoidal cell volumes: full cells inside, halved at truncation faces.
  auto axis_weight = [this](int k) { return (k == 0 || k == npts_ - 1) ? 0.5 : 1.0; };
  if (n_ == 1) {
    mass_.resize(npts_);
    for (int i = 0; i < npts_; ++i) mass_(i) = axis_weight(i) * h_;
  } else {
    mass_.resize(static_cast<Index>(npts_) * npts_);
    for (int ix = 0; ix < npts_; ++ix)
      for (int iy = 0; iy < npts_; ++iy)
        mass_(node_index(ix, iy)) = axis_weight(ix) * axis_weight(iy) * h_ * h_;
  }
}

double Grid::box_volume() const { return std::pow(2.0 * lbox_, n_); }

Eigen::Vector2d Grid::node(Index i) const {
  Eigen::Vector2d x = Eigen::Vector2d::Zero();
  x(0) = -lbox_ + h_ * axis_index(i, 0);
  if (n_ == 2) x(1) = -lbox_ + h_ * axis_index(i, 1);
  return x;
}

Index Grid::node_index(int ix, int iy) const {
  return n_ == 1 ? static_cast<Index>(ix) : static_cast<Index>(ix) * npts_ + iy;
}

int Grid::axis_index(Index node, int axis) const {
  if (n_ == 1) return static_cast<int>(node);
  return axis == 0 ? static_cast<int>(node / npts_) : static_cast<int>(node % npts_);
}

bool Grid::on_truncation_boundary(Index node) const {
  for (int axis = 0; axis < n_; ++axis) {
    const int k = axis_index(node, axis);
    if (k == 0 || k == npts_ - 1) return true;
  }
  return false;
}

Grid build_grid(int n, double lbox, int points_per_axis, BoundaryTag bc) {
  return Grid(n, lbox, points_per_axis, bc);
}

RegionSpec RegionSpec::box(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi) {
  RegionSpec r;
  r.kind = Kind::Box;
  r.lo = lo;
  r.hi = hi;
  return r;
}

RegionSpec RegionSpec::box1d(double lo, double hi) {
  return box(Eigen::Vector2d(lo, 0.0), Eigen::Vector2d(hi, 1.0));
}

RegionSpec RegionSpec::ball(const Eigen::Vector2d& center, double radius) {
  RegionSpec r;
  r.kind = Kind::Ball;
  r.center = center;
  r.radius = radius;
  return r;
}

RegionSpec RegionSpec::ball1d(double center, double radius) {
  return ball(Eigen::Vector2d(center, 0.0), radius);
}

RegionSpec RegionSpec::all() {
  const double inf = std::numeric_limits<double>::max();
  return box(Eigen::Vector2d(-inf, -inf), Eigen::Vector2d(inf, inf));
}

bool RegionSpec::contains(const Eigen::Vector2d& x, int n) const {
  if (kind == Kind::Box) {
    for (int a = 0; a < n; ++a)
      if (x(a) < lo(a) || x(a) >= hi(a)) return false;
    return true;
  }
  double d2 = 0.0;
  for (int a = 0; a < n; ++a) d2 += (x(a) - center(a)) * (x(a) - center(a));
  return d2 < radius * radius;
}

DomainPartition partition_domain(const Grid& grid, const RegionSpec& omega_spec,
                                 const RegionSpec* o1_spec, const RegionSpec* o2_spec) {
  DomainPartition p;
  const Index nn = grid.num_nodes();
  p.in_omega.assign(static_cast<size_t>(nn), 0);
  for (Index i = 0; i < nn; ++i) {
    if (omega_spec.contains(grid.node(i), grid.dim())) {
      if (grid.on_truncation_boundary(i))
        throw std::invalid_argument("partition: Omega touches the truncation boundary");
      p.in_omega[static_cast<size_t>(i)] = 1;
      p.omega.push_back(i);
    } else {
      p.exterior.push_back(i);
    }
  }
  if (p.omega.empty()) throw std::invalid_argument("partition: Omega selects no node");
  if (p.exterior.empty()) throw std::invalid_argument("partition: exterior is empty");

  auto collect = [&](const RegionSpec* spec, std::vector<Index>& out) {
    if (!spec) return;
    for (Index i = 0; i < nn; ++i) {
      if (!spec->contains(grid.node(i), grid.dim())) continue;
      if (p.in_omega[static_cast<size_t>(i)])
        throw std::invalid_argument("partition: control region overlaps Omega");
      out.push_back(i);
    }
  };
  collect(o1_spec, p.o1);
  collect(o2_spec, p.o2);
  return p;
}

CoefficientSpec CoefficientSpec::identity() {
  CoefficientSpec s;
  s.eval = [](const Eigen::Vector2d&) { return Eigen::Matrix2d::Identity(); };
  return s;
}

CoefficientSpec CoefficientSpec::isotropic(std::function<double(const Eigen::Vector2d&)> a) {
  CoefficientSpec s;
  s.eval = [a = std::move(a)](const Eigen::Vector2d& x) {
    return Eigen::Matrix2d(a(x) * Eigen::Matrix2d::Identity());
  };
  return s;
}

CoefficientSpec CoefficientSpec::diagonal(std::function<double(const Eigen::Vector2d&)> a11,
                                          std::function<double(const Eigen::Vector2d&)> a22) {
  CoefficientSpec s;
  s.eval = [a11 = std::move(a11), a22 = std::move(a22)](const Eigen::Vector2d& x) {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(0, 0) = a11(x);
    m(1, 1) = a22(x);
    return m;
  };
  return s;
}

CoefficientSpec CoefficientSpec::full(std::function<double(const Eigen::Vector2d&)> a11,
                                      std::function<double(const Eigen::Vector2d&)> a22,
                                      std::function<double(const Eigen::Vector2d&)> a12,
                                      double declared_lambda) {
  CoefficientSpec s;
  s.declared_lambda = declared_lambda;
  s.eval = [a11 = std::move(a11), a22 = std::move(a22), a12 = std::move(a12)](const Eigen::Vector2d& x) {
    Eigen::Matrix2d m;
    m(0, 0) = a11(x);
    m(1, 1) = a22(x);
    m(0, 1) = m(1, 0) = a12(x);
    return m;
  };
  return s;
}

bool CoefficientField::is_identity() const {
  for (const auto& m : a) {
    if (std::abs(m(0, 0) - 1.0) > 0 || (n == 2 && (std::abs(m(1, 1) - 1.0) > 0 || m(0, 1) != 0.0)))
      return false;
  }
  return true;
}

bool CoefficientField::is_diagonal() const {
  if (n == 1) return true;
  for (const auto& m : a)
    if (m(0, 1) != 0.0 || m(1, 0) != 0.0) return false;
  return true;
}

CoefficientField sample_coefficient(const Grid& grid, const CoefficientSpec& spec) {
  CoefficientField field;
  field.n = grid.dim();
  field.a.resize(static_cast<size_t>(grid.num_nodes()));
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (Index i = 0; i < grid.num_nodes(); ++i) {
    Eigen::Matrix2d raw = spec.eval(grid.node(i));
    if (grid.dim() == 1) {
      raw(0, 1) = raw(1, 0) = 0.0;
      raw(1, 1) = 1.0;
    }
    if (std::abs(raw(0, 1) - raw(1, 0)) > 1e-14)
      throw std::invalid_argument("coefficient: A(x) not symmetric at a node");
    Eigen::Matrix2d sym = 0.5 * (raw + raw.transpose());
    double lmin, lmax;
    if (grid.dim() == 1) {
      lmin = lmax = sym(0, 0);
    } else {
      const double tr = sym(0, 0) + sym(1, 1);
      const double det = sym(0, 0) * sym(1, 1) - sym(0, 1) * sym(1, 0);
      const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
      lmin = tr / 2.0 - disc;
      lmax = tr / 2.0 + disc;
    }
    if (!(lmin > 0.0))
      throw std::invalid_argument("coefficient: non-positive eigenvalue at a node");
    lo = std::min(lo, lmin);
    hi = std::max(hi, lmax);
    field.a[static_cast<size_t>(i)] = sym;
  }
  field.min_eigenvalue = lo;
  field.max_eigenvalue = hi;
  field.lambda_bound = std::ceil(std::max(hi, 1.0 / lo));
  if (spec.declared_lambda > field.lambda_bound) field.lambda_bound = spec.declared_lambda;
  return field;
}

}  // namespace fraclab
