#ifndef FRACLAB_ASSEMBLY_HPP
#define FRACLAB_ASSEMBLY_HPP

#include "fraclab/extension_grid.hpp"
#include "fraclab/grid.hpp"

namespace fraclab {

/// Flux-form finite-volume discretization of L = -div(A(x) grad).
/// The primary storage is the mass-weighted matrix M*L (symmetric); the
/// spectral and forward modules work with it and the diagonal masses.
class DiscreteEllipticOperator {
 public:
  DiscreteEllipticOperator(Matrix weighted, Vector mass, BoundaryTag bc, bool mass_symmetric);

  /// M*L, symmetric positive semidefinite.
  const Matrix& weighted() const { return weighted_; }
  const Vector& mass() const { return mass_; }
  BoundaryTag boundary() const { return bc_; }
  bool is_mass_symmetric() const { return mass_symmetric_; }
  Index size() const { return mass_.size(); }

  /// L itself (rows of weighted() divided by the node mass).
  Matrix matrix() const;
  Vector apply(const Vector& u) const;  // L u

 private:
  Matrix weighted_;
  Vector mass_;
  BoundaryTag bc_;
  bool mass_symmetric_;
};

DiscreteEllipticOperator assemble_local_operator(const Grid& grid, const CoefficientField& coeff);

/// Degenerate weighted operator div(|y|^{1-2s} Atilde grad) on the tensor
/// extension mesh, kept in factored form: the spatial stiffness enters each
/// y-level scaled by the exact dual-cell weight integral, and y-faces carry
/// harmonic (resistance-integral) conductances. dense() materializes the
/// full matrix for small meshes.
class ExtensionOperator {
 public:
  ExtensionOperator(ExtensionGrid egrid, DiscreteEllipticOperator xop, double s);

  const ExtensionGrid& egrid() const { return egrid_; }
  const DiscreteEllipticOperator& xop() const { return xop_; }
  double s() const { return s_; }

  Index x_nodes() const { return xop_.size(); }
  int levels() const { return egrid_.levels(); }

  /// y-face conductance r_j = 1 / int_{y_j}^{y_{j+1}} y^{2s-1} dy.
  double y_conductance(int j) const { return y_conductance_(j); }
  /// Transverse weight of level j: int over the dual y-cell of y^{1-2s} dy.
  double y_dual_weight(int j) const { return y_dual_weight_(j); }

  /// Node mass in the weighted pairing: m_x(i) * dual weight(j).
  double node_mass(Index i, int j) const { return xop_.mass()(i) * y_dual_weight_(j); }

  /// Weighted stiffness applied to a field laid out as (#x nodes) x (levels).
  Matrix apply(const Matrix& field) const;

  /// Full dense matrix, flat index = level * (#x nodes) + x index.
  Matrix dense() const;

  /// Weighted Dirichlet energy 1/2 U:ML:U minus an optional load pairing.
  double energy(const Matrix& field) const;

 private:
  ExtensionGrid egrid_;
  DiscreteEllipticOperator xop_;
  double s_;
  Vector y_conductance_;
  Vector y_dual_weight_;
};

ExtensionOperator assemble_extension_operator(const ExtensionGrid& egrid,
                                              const CoefficientField& coeff, double s);

}  // namespace fraclab

#endif
