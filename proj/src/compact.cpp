#include "bbmb/compact.hpp"

namespace bbmb {

CyclicTridiagonal CompactOperator::matrix_A(const SpaceGrid& grid) {
  // I + (h^2/12) dxx has constant stencil (1/12, 5/6, 1/12).
  const int m = grid.node_count;
  CyclicTridiagonal a;
  a.sub = Vector::Constant(m, 1.0 / 12.0);
  a.diag = Vector::Constant(m, 5.0 / 6.0);
  a.sup = Vector::Constant(m, 1.0 / 12.0);
  return a;
}

CompactOperator::CompactOperator(const SpaceGrid& grid)
    : grid_(grid), solver_(matrix_A(grid)) {}

GridFunction CompactOperator::apply_A(const GridFunction& w) const {
  if (!(w.grid == grid_)) throw std::invalid_argument("CompactOperator: grid mismatch");
  GridFunction d = ops::delta_xx(w);
  const double c = grid_.h * grid_.h / 12.0;
  return {grid_, w.values + c * d.values};
}

GridFunction CompactOperator::second_derivative(const GridFunction& u) const {
  if (!(u.grid == grid_)) throw std::invalid_argument("CompactOperator: grid mismatch");
  GridFunction d = ops::delta_xx(u);
  return {grid_, solver_.solve(d.values)};
}

}  // namespace bbmb
