#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

namespace bbmb {

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Periodic (cyclic) tridiagonal matrix. Row p couples x_{p-1}, x_p, x_{p+1}
/// with indices wrapped modulo M, so row 0 touches column M-1 and vice versa.
struct CyclicTridiagonal {
  Vector sub, diag, sup;  // each of length M

  static CyclicTridiagonal zero(int m) {
    return {Vector::Zero(m), Vector::Zero(m), Vector::Zero(m)};
  }

  int size() const { return static_cast<int>(diag.size()); }
  Vector apply(const Vector& x) const;
  Matrix dense() const;
};

/// Thomas elimination of the Sherman-Morrison-corrected core, cached so the
/// same matrix can be solved against many right-hand sides.
class CyclicTridiagonalSolver {
 public:
  explicit CyclicTridiagonalSolver(const CyclicTridiagonal& a);
  Vector solve(const Vector& rhs) const;

 private:
  Vector solve_core(const Vector& rhs) const;

  int m_;
  Vector sub_, sup_;
  Vector pivot_inv_;      // cached forward-elimination pivots of the corrected core
  Vector correction_q_;   // core^{-1} u for the rank-one wrap correction
  double gamma_ = 0.0;
  double wrap_sub_ = 0.0;  // A(0, M-1)
  double wrap_sup_ = 0.0;  // A(M-1, 0)
  double denom_ = 0.0;     // 1 + v^T q
};

Vector solve_cyclic_tridiagonal(const CyclicTridiagonal& a, const Vector& rhs);

/// Dense LU with partial pivoting; throws SingularMatrix when the pivot
/// search comes up empty.
Vector solve_dense_lu(const Matrix& a, const Vector& rhs);

/// Cyclic block-tridiagonal matrix with 2x2 blocks; the banded form the
/// coupled (u, w) step systems take when unknowns are interleaved per node.
struct BlockCyclicTridiagonal {
  std::vector<Eigen::Matrix2d> sub, diag, sup;

  static BlockCyclicTridiagonal zero(int m) {
    return {std::vector<Eigen::Matrix2d>(m, Eigen::Matrix2d::Zero()),
            std::vector<Eigen::Matrix2d>(m, Eigen::Matrix2d::Zero()),
            std::vector<Eigen::Matrix2d>(m, Eigen::Matrix2d::Zero())};
  }

  int blocks() const { return static_cast<int>(diag.size()); }
  Vector apply(const Vector& x) const;
  Matrix dense() const;  // 2M x 2M, interleaved ordering
};

/// O(M) block-Thomas solve with the wrap coupling handled by bordering on
/// the last block unknown.
Vector solve_block_cyclic(const BlockCyclicTridiagonal& a, const Vector& rhs);

}  // namespace bbmb
