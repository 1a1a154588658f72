#include "fraclab/assembly.hpp"

#include <cmath>

namespace fraclab {

namespace {

double harmonic_mean(double a, double b) { return 2.0 * a * b / (a + b); }

// Accumulates the symmetrized cross-difference stencil for the off-diagonal
// coefficient: energy sum_i m_i a12_i [(Dx u)(Dy v) + (Dy u)(Dx v)] with
// centered differences inside and one-sided differences on the truncation
// faces. Constants are annihilated by every difference row.
void add_cross_terms(const Grid& grid, const CoefficientField& coeff, Matrix& w) {
  const int npts = grid.points_per_axis();
  const double h = grid.spacing();
  struct Entry {
    Index idx;
    double coef;
  };
  auto difference = [&](int k, int fixed, int axis, Entry out[2]) {
    auto at = [&](int kk) {
      return axis == 0 ? grid.node_index(kk, fixed) : grid.node_index(fixed, kk);
    };
    if (k == 0) {
      out[0] = {at(1), 1.0 / h};
      out[1] = {at(0), -1.0 / h};
    } else if (k == npts - 1) {
      out[0] = {at(npts - 1), 1.0 / h};
      out[1] = {at(npts - 2), -1.0 / h};
    } else {
      out[0] = {at(k + 1), 0.5 / h};
      out[1] = {at(k - 1), -0.5 / h};
    }
  };
  for (int ix = 0; ix < npts; ++ix) {
    for (int iy = 0; iy < npts; ++iy) {
      const Index i = grid.node_index(ix, iy);
      const double d = grid.mass()(i) * coeff.a[static_cast<size_t>(i)](0, 1);
      if (d == 0.0) continue;
      Entry gx[2], gy[2];
      difference(ix, iy, 0, gx);
      difference(iy, ix, 1, gy);
      for (const auto& ex : gx)
        for (const auto& ey : gy) {
          const double v = d * ex.coef * ey.coef;
          w(ex.idx, ey.idx) += v;
          w(ey.idx, ex.idx) += v;
        }
    }
  }
}

}  // namespace

DiscreteEllipticOperator::DiscreteEllipticOperator(Matrix weighted, Vector mass, BoundaryTag bc,
                                                   bool mass_symmetric)
    : weighted_(std::move(weighted)),
      mass_(std::move(mass)),
      bc_(bc),
      mass_symmetric_(mass_symmetric) {}

Matrix DiscreteEllipticOperator::matrix() const {
  return mass_.cwiseInverse().asDiagonal() * weighted_;
}

Vector DiscreteEllipticOperator::apply(const Vector& u) const {
  return mass_.cwiseInverse().asDiagonal() * (weighted_ * u);
}

DiscreteEllipticOperator assemble_local_operator(const Grid& grid, const CoefficientField& coeff) {
  if (static_cast<Index>(coeff.a.size()) != grid.num_nodes())
    throw std::invalid_argument("assembly: coefficient field does not match the grid");
  const Index nn = grid.num_nodes();
  const int npts = grid.points_per_axis();
  const double h = grid.spacing();
  const double hpow = std::pow(h, grid.dim() - 2);
  Matrix w = Matrix::Zero(nn, nn);

  auto axx = [&](Index i) { return coeff.a[static_cast<size_t>(i)](0, 0); };
  auto ayy = [&](Index i) { return coeff.a[static_cast<size_t>(i)](1, 1); };
  auto connect = [&](Index i, Index j, double c) {
    w(i, i) += c;
    w(j, j) += c;
    w(i, j) -= c;
    w(j, i) -= c;
  };
  // Transverse extent of a lateral face scales with the cell size of the
  // shared orthogonal index: halved on the truncation faces.
  auto transverse = [&](int k) { return (k == 0 || k == npts - 1) ? 0.5 : 1.0; };

  if (grid.dim() == 1) {
    for (int i = 0; i + 1 < npts; ++i)
      connect(i, i + 1, harmonic_mean(axx(i), axx(i + 1)) * hpow);
    if (grid.boundary() == BoundaryTag::Absorbing) {
      w(0, 0) += axx(0) * hpow;
      w(npts - 1, npts - 1) += axx(npts - 1) * hpow;
    }
  } else {
    for (int ix = 0; ix < npts; ++ix) {
      for (int iy = 0; iy < npts; ++iy) {
        const Index i = grid.node_index(ix, iy);
        if (ix + 1 < npts) {
          const Index j = grid.node_index(ix + 1, iy);
          connect(i, j, harmonic_mean(axx(i), axx(j)) * transverse(iy) * hpow);
        }
        if (iy + 1 < npts) {
          const Index j = grid.node_index(ix, iy + 1);
          connect(i, j, harmonic_mean(ayy(i), ayy(j)) * transverse(ix) * hpow);
        }
        if (grid.boundary() == BoundaryTag::Absorbing) {
          if (ix == 0 || ix == npts - 1) w(i, i) += axx(i) * transverse(iy) * hpow;
          if (iy == 0 || iy == npts - 1) w(i, i) += ayy(i) * transverse(ix) * hpow;
        }
      }
    }
    if (!coeff.is_diagonal()) add_cross_terms(grid, coeff, w);
  }
  return DiscreteEllipticOperator(std::move(w), grid.mass(), grid.boundary(), true);
}

ExtensionOperator::ExtensionOperator(ExtensionGrid egrid, DiscreteEllipticOperator xop, double s)
    : egrid_(std::move(egrid)), xop_(std::move(xop)), s_(s) {
  const int cells = egrid_.cells();
  y_conductance_.resize(cells);
  for (int j = 0; j < cells; ++j) y_conductance_(j) = 1.0 / egrid_.cell_resistance(j);
  y_dual_weight_.resize(cells + 1);
  for (int j = 0; j <= cells; ++j) y_dual_weight_(j) = egrid_.dual_weight(j);
}

Matrix ExtensionOperator::apply(const Matrix& field) const {
  const Index nx = x_nodes();
  const int nl = levels();
  if (field.rows() != nx || field.cols() != nl)
    throw std::invalid_argument("extension operator: field has wrong shape");
  Matrix out(nx, nl);
  const Matrix& wx = xop_.weighted();
  const Vector& mx = xop_.mass();
  for (int j = 0; j < nl; ++j) {
    out.col(j) = y_dual_weight_(j) * (wx * field.col(j));
    if (j > 0)
      out.col(j) += y_conductance_(j - 1) * mx.cwiseProduct(field.col(j) - field.col(j - 1));
    if (j + 1 < nl)
      out.col(j) += y_conductance_(j) * mx.cwiseProduct(field.col(j) - field.col(j + 1));
  }
  return out;
}

Matrix ExtensionOperator::dense() const {
  const Index nx = x_nodes();
  const int nl = levels();
  Matrix full = Matrix::Zero(nx * nl, nx * nl);
  const Matrix& wx = xop_.weighted();
  const Vector& mx = xop_.mass();
  for (int j = 0; j < nl; ++j) {
    full.block(j * nx, j * nx, nx, nx) = y_dual_weight_(j) * wx;
    if (j + 1 < nl) {
      const double r = y_conductance_(j);
      for (Index i = 0; i < nx; ++i) {
        full(j * nx + i, j * nx + i) += r * mx(i);
        full((j + 1) * nx + i, (j + 1) * nx + i) += r * mx(i);
        full(j * nx + i, (j + 1) * nx + i) -= r * mx(i);
        full((j + 1) * nx + i, j * nx + i) -= r * mx(i);
      }
    }
  }
  return full;
}

double ExtensionOperator::energy(const Matrix& field) const {
  const Matrix& wx = xop_.weighted();
  const Vector& mx = xop_.mass();
  double e = 0.0;
  for (int j = 0; j < levels(); ++j)
    e += 0.5 * y_dual_weight_(j) * field.col(j).dot(wx * field.col(j));
  for (int j = 0; j + 1 < levels(); ++j) {
    const Vector d = field.col(j + 1) - field.col(j);
    e += 0.5 * y_conductance_(j) * d.dot(mx.cwiseProduct(d));
  }
  return e;
}

ExtensionOperator assemble_extension_operator(const ExtensionGrid& egrid,
                                              const CoefficientField& coeff, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("extension operator: s must lie in (0,1)");
  if (std::abs(s - egrid.s()) > 1e-14)
    throw std::invalid_argument("extension operator: s disagrees with the extension grid");
  DiscreteEllipticOperator xop = assemble_local_operator(egrid.xgrid(), coeff);
  return ExtensionOperator(egrid, std::move(xop), s);
}

}  // namespace fraclab
