#pragma once

#include <Eigen/Core>

#include "bbmb/mesh.hpp"

namespace bbmb {

using Vector = Eigen::VectorXd;

/// Periodic grid function: values[p-1] holds w_p for p = 1..M.
struct GridFunction {
  SpaceGrid grid;
  Vector values;

  GridFunction() = default;
  GridFunction(SpaceGrid g, Vector v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.node_count)
      throw std::invalid_argument("GridFunction: value count does not match grid");
  }

  static GridFunction zero(const SpaceGrid& g) {
    return GridFunction(g, Vector::Zero(g.node_count));
  }

  /// Wrapped access: w_p == w_{p+M} for any integer p.
  double operator()(long p) const { return values[grid.wrap(p)]; }

  int size() const { return grid.node_count; }
};

namespace ops {

void require_same_grid(const GridFunction& v, const GridFunction& w);

/// Forward staggered difference: entry p holds (w_p - w_{p-1}) / h.
GridFunction delta_x_half(const GridFunction& w);

/// Second difference (w_{p+1} - 2 w_p + w_{p-1}) / h^2.
GridFunction delta_xx(const GridFunction& w);

/// Central difference (w_{p+1} - w_{p-1}) / (2h).
GridFunction delta_x_central(const GridFunction& w);

/// Skew form of the convection term: (1/3)[v_p (Dx w)_p + Dx(v w)_p].
/// Bilinear in (v, w) and satisfies <psi(v,w), w> = 0.
GridFunction psi(const GridFunction& v, const GridFunction& w);

double inner(const GridFunction& v, const GridFunction& w);     // h sum v_p w_p
double inner_h1(const GridFunction& v, const GridFunction& w);  // h sum (dx v)(dx w)
double norm_l2(const GridFunction& w);
double seminorm_h1(const GridFunction& w);
double norm_max(const GridFunction& w);

}  // namespace ops
}  // namespace bbmb
