#ifndef FRACLAB_EXTENSION_GRID_HPP
#define FRACLAB_EXTENSION_GRID_HPP

#include "fraclab/grid.hpp"

namespace fraclab {

/// Tensor mesh for the extension problem: the spatial grid crossed with a
/// graded half-line mesh y_j = Ymax (j/J)^gamma, j = 0..J. All integrals of
/// the singular weight y^{1-2s} over cells are stored in closed form; the
/// weight is never sampled at nodes.
class ExtensionGrid {
 public:
  ExtensionGrid(Grid xgrid, double s, double ymax, int jcells, double gamma);

  const Grid& xgrid() const { return xgrid_; }
  double s() const { return s_; }
  double ymax() const { return ymax_; }
  double gamma() const { return gamma_; }
  int cells() const { return jcells_; }
  int levels() const { return jcells_ + 1; }

  double ynode(int j) const { return ynodes_(j); }
  const Vector& ynodes() const { return ynodes_; }

  /// int_{y_j}^{y_{j+1}} y^{1-2s} dy, finite for all cells including the first.
  double cell_weight(int j) const { return cell_weight_(j); }
  /// int_{y_j}^{y_{j+1}} y^{2s-1} dy (the resistance integral of the weight).
  double cell_resistance(int j) const { return cell_resistance_(j); }
  /// Weight integral over the dual cell around node j.
  double dual_weight(int j) const { return dual_weight_(j); }

 private:
  Grid xgrid_;
  double s_;
  double ymax_;
  double gamma_;
  int jcells_;
  Vector ynodes_;
  Vector cell_weight_;
  Vector cell_resistance_;
  Vector dual_weight_;
};

/// gamma <= 0 requests the default grading 2/(2-2s) clipped to [1,4].
ExtensionGrid build_extension_grid(const Grid& grid, double s, double ymax, int jcells,
                                   double gamma = 0.0);

}  // namespace fraclab

#endif
