#include "fraclab/extension_grid.hpp"

#include <cmath>

namespace fraclab {

namespace {
// Antiderivative of y^{1-2s} (resp. y^{2s-1}) evaluated between a < b.
double weight_integral(double a, double b, double s) {
  const double p = 2.0 - 2.0 * s;
  return (std::pow(b, p) - std::pow(a, p)) / p;
}
double resistance_integral(double a, double b, double s) {
  const double p = 2.0 * s;
  return (std::pow(b, p) - std::pow(a, p)) / p;
}
}  // namespace

ExtensionGrid::ExtensionGrid(Grid xgrid, double s, double ymax, int jcells, double gamma)
    : xgrid_(std::move(xgrid)), s_(s), ymax_(ymax), gamma_(gamma), jcells_(jcells) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("extension grid: s must lie in (0,1)");
  if (jcells < 8) throw std::invalid_argument("extension grid: need at least 8 cells in y");
  if (!(gamma >= 1.0)) throw std::invalid_argument("extension grid: grading exponent must be >= 1");
  const double diam = 2.0 * xgrid_.lbox() * std::sqrt(static_cast<double>(xgrid_.dim()));
  if (!(ymax > diam))
    throw std::invalid_argument("extension grid: Ymax must exceed the spatial domain diameter");

  ynodes_.resize(jcells_ + 1);
  for (int j = 0; j <= jcells_; ++j)
    ynodes_(j) = ymax_ * std::pow(static_cast<double>(j) / jcells_, gamma_);

  cell_weight_.resize(jcells_);
  cell_resistance_.resize(jcells_);
  for (int j = 0; j < jcells_; ++j) {
    cell_weight_(j) = weight_integral(ynodes_(j), ynodes_(j + 1), s_);
    cell_resistance_(j) = resistance_integral(ynodes_(j), ynodes_(j + 1), s_);
  }

  dual_weight_.resize(jcells_ + 1);
  for (int j = 0; j <= jcells_; ++j) {
    const double lo = (j == 0) ? 0.0 : 0.5 * (ynodes_(j - 1) + ynodes_(j));
    const double hi = (j == jcells_) ? ymax_ : 0.5 * (ynodes_(j) + ynodes_(j + 1));
    dual_weight_(j) = weight_integral(lo, hi, s_);
  }
}

ExtensionGrid build_extension_grid(const Grid& grid, double s, double ymax, int jcells,
                                   double gamma) {
  if (gamma <= 0.0) gamma = std::min(4.0, std::max(1.0, 2.0 / (2.0 - 2.0 * s)));
  return ExtensionGrid(grid, s, ymax, jcells, gamma);
}

}  // namespace fraclab
