#pragma once

#include "bbmb/linsolve.hpp"
#include "bbmb/ops.hpp"

namespace bbmb {

/// Fourth-order compact relation between u and its discrete second
/// derivative w: (I + h^2/12 * dxx) w = dxx u. The matrix A is symmetric
/// circulant with eigenvalues 1 - (1/3) sin^2(p*pi/M) in [2/3, 1]; its
/// factorization is computed once per grid and reused for every solve.
class CompactOperator {
 public:
  explicit CompactOperator(const SpaceGrid& grid);

  const SpaceGrid& grid() const { return grid_; }

  /// w + (h^2/12) dxx w.
  GridFunction apply_A(const GridFunction& w) const;

  /// Solves A w = dxx u for w.
  GridFunction second_derivative(const GridFunction& u) const;

  static CyclicTridiagonal matrix_A(const SpaceGrid& grid);

 private:
  SpaceGrid grid_;
  CyclicTridiagonalSolver solver_;
};

}  // namespace bbmb
