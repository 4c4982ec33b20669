#include "bbmb/linsolve.hpp"

#include <Eigen/LU>
#include <cmath>

namespace bbmb {
namespace {

Eigen::Matrix2d invert_2x2(const Eigen::Matrix2d& m) {
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double scale = m.cwiseAbs().maxCoeff();
  if (std::abs(det) <= 1e-300 || std::abs(det) < 1e-14 * scale * scale)
    throw SingularMatrix("singular 2x2 pivot block in block-cyclic elimination");
  Eigen::Matrix2d inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

}  // namespace

Vector CyclicTridiagonal::apply(const Vector& x) const {
  const int m = size();
  Vector out(m);
  for (int i = 0; i < m; ++i) {
    const int l = i == 0 ? m - 1 : i - 1;
    const int r = i == m - 1 ? 0 : i + 1;
    out[i] = sub[i] * x[l] + diag[i] * x[i] + sup[i] * x[r];
  }
  return out;
}

Matrix CyclicTridiagonal::dense() const {
  const int m = size();
  Matrix out = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    out(i, i == 0 ? m - 1 : i - 1) += sub[i];
    out(i, i) += diag[i];
    out(i, i == m - 1 ? 0 : i + 1) += sup[i];
  }
  return out;
}

CyclicTridiagonalSolver::CyclicTridiagonalSolver(const CyclicTridiagonal& a)
    : m_(a.size()), sub_(a.sub), sup_(a.sup) {
  if (m_ < 3) throw std::invalid_argument("cyclic tridiagonal solver needs M >= 3");
  wrap_sub_ = a.sub[0];
  wrap_sup_ = a.sup[m_ - 1];
  gamma_ = a.diag[0] != 0.0 ? -a.diag[0] : 1.0;

  // Sherman-Morrison core: corners folded into the first and last diagonal.
  Vector core_diag = a.diag;
  core_diag[0] -= gamma_;
  core_diag[m_ - 1] -= wrap_sup_ * wrap_sub_ / gamma_;

  const double scale = a.diag.cwiseAbs().maxCoeff() + a.sub.cwiseAbs().maxCoeff() +
                       a.sup.cwiseAbs().maxCoeff();
  pivot_inv_.resize(m_);
  double pivot = core_diag[0];
  if (std::abs(pivot) < 1e-300 + 1e-15 * scale)
    throw SingularMatrix("zero pivot in cyclic tridiagonal elimination (row 0)");
  pivot_inv_[0] = 1.0 / pivot;
  for (int i = 1; i < m_; ++i) {
    pivot = core_diag[i] - sub_[i] * sup_[i - 1] * pivot_inv_[i - 1];
    if (std::abs(pivot) < 1e-300 + 1e-15 * scale)
      throw SingularMatrix("zero pivot in cyclic tridiagonal elimination");
    pivot_inv_[i] = 1.0 / pivot;
  }

  Vector u = Vector::Zero(m_);
  u[0] = gamma_;
  u[m_ - 1] = wrap_sup_;
  correction_q_ = solve_core(u);
  denom_ = 1.0 + correction_q_[0] + (wrap_sub_ / gamma_) * correction_q_[m_ - 1];
  if (std::abs(denom_) < 1e-14)
    throw SingularMatrix("singular wrap correction in cyclic tridiagonal solve");
}

Vector CyclicTridiagonalSolver::solve_core(const Vector& rhs) const {
  Vector z(m_);
  z[0] = rhs[0];
  for (int i = 1; i < m_; ++i) z[i] = rhs[i] - sub_[i] * z[i - 1] * pivot_inv_[i - 1];
  Vector x(m_);
  x[m_ - 1] = z[m_ - 1] * pivot_inv_[m_ - 1];
  for (int i = m_ - 2; i >= 0; --i) x[i] = (z[i] - sup_[i] * x[i + 1]) * pivot_inv_[i];
  return x;
}

Vector CyclicTridiagonalSolver::solve(const Vector& rhs) const {
  Vector y = solve_core(rhs);
  const double vty = y[0] + (wrap_sub_ / gamma_) * y[m_ - 1];
  return y - correction_q_ * (vty / denom_);
}

Vector solve_cyclic_tridiagonal(const CyclicTridiagonal& a, const Vector& rhs) {
  return CyclicTridiagonalSolver(a).solve(rhs);
}

Vector solve_dense_lu(const Matrix& a, const Vector& rhs) {
  if (a.rows() != a.cols() || a.rows() != rhs.size())
    throw std::invalid_argument("solve_dense_lu: shape mismatch");
  Eigen::PartialPivLU<Matrix> lu(a);
  const Vector u_diag = lu.matrixLU().diagonal().cwiseAbs();
  if (u_diag.minCoeff() <= 1e-14 * (u_diag.maxCoeff() + 1e-300))
    throw SingularMatrix("zero pivot after pivot search in dense LU");
  return lu.solve(rhs);
}

Vector BlockCyclicTridiagonal::apply(const Vector& x) const {
  const int m = blocks();
  Vector out = Vector::Zero(2 * m);
  for (int p = 0; p < m; ++p) {
    const int l = p == 0 ? m - 1 : p - 1;
    const int r = p == m - 1 ? 0 : p + 1;
    out.segment<2>(2 * p) = sub[p] * x.segment<2>(2 * l) + diag[p] * x.segment<2>(2 * p) +
                            sup[p] * x.segment<2>(2 * r);
  }
  return out;
}

Matrix BlockCyclicTridiagonal::dense() const {
  const int m = blocks();
  Matrix out = Matrix::Zero(2 * m, 2 * m);
  for (int p = 0; p < m; ++p) {
    const int l = p == 0 ? m - 1 : p - 1;
    const int r = p == m - 1 ? 0 : p + 1;
    out.block<2, 2>(2 * p, 2 * l) += sub[p];
    out.block<2, 2>(2 * p, 2 * p) += diag[p];
    out.block<2, 2>(2 * p, 2 * r) += sup[p];
  }
  return out;
}

namespace {

// Block-Thomas factorization of the interior chain p = 0..M-2 with the last
// block bordered out; reusable across right-hand sides so a solve plus
// iterative-refinement passes cost one elimination.
class BlockCyclicFactor {
 public:
  explicit BlockCyclicFactor(const BlockCyclicTridiagonal& a)
      : a_(a), m_(a.blocks()), n_(m_ - 1), pivot_inv_(n_), w_(n_), coupling_(n_) {
    // Coupling columns K_p of each interior equation to the bordered unknown.
    for (int p = 0; p < n_; ++p) coupling_[p].setZero();
    coupling_[0] = a.sub[0];
    coupling_[n_ - 1] += a.sup[n_ - 1];

    pivot_inv_[0] = invert_2x2(a.diag[0]);
    w_[0] = pivot_inv_[0] * a.sup[0];
    coupling_[0] = pivot_inv_[0] * coupling_[0];
    for (int p = 1; p < n_; ++p) {
      pivot_inv_[p] = invert_2x2(a.diag[p] - a.sub[p] * w_[p - 1]);
      w_[p] = pivot_inv_[p] * a.sup[p];
      coupling_[p] = pivot_inv_[p] * (coupling_[p] - a.sub[p] * coupling_[p - 1]).eval();
    }
    for (int p = n_ - 2; p >= 0; --p) coupling_[p] -= w_[p] * coupling_[p + 1];
    // Now z_p = y_p - coupling_[p] * z_{M-1} for interior p.

    closure_inv_ = invert_2x2(a.diag[m_ - 1] - a.sub[m_ - 1] * coupling_[n_ - 1] -
                              a.sup[m_ - 1] * coupling_[0]);
  }

  Vector solve(const Vector& rhs) const {
    std::vector<Eigen::Vector2d> y(n_);
    y[0] = pivot_inv_[0] * rhs.segment<2>(0);
    for (int p = 1; p < n_; ++p)
      y[p] = pivot_inv_[p] * (rhs.segment<2>(2 * p) - a_.sub[p] * y[p - 1]).eval();
    for (int p = n_ - 2; p >= 0; --p) y[p] -= w_[p] * y[p + 1];

    const Eigen::Vector2d z_last =
        closure_inv_ * (rhs.segment<2>(2 * (m_ - 1)) - a_.sub[m_ - 1] * y[n_ - 1] -
                        a_.sup[m_ - 1] * y[0]);
    Vector x(2 * m_);
    x.segment<2>(2 * (m_ - 1)) = z_last;
    for (int p = 0; p < n_; ++p) x.segment<2>(2 * p) = y[p] - coupling_[p] * z_last;
    return x;
  }

 private:
  const BlockCyclicTridiagonal& a_;
  int m_, n_;
  std::vector<Eigen::Matrix2d> pivot_inv_, w_, coupling_;
  Eigen::Matrix2d closure_inv_;
};

}  // namespace

Vector solve_block_cyclic(const BlockCyclicTridiagonal& a, const Vector& rhs) {
  const int m = a.blocks();
  if (m < 3) throw std::invalid_argument("block cyclic solver needs M >= 3");
  if (rhs.size() != 2 * m) throw std::invalid_argument("block cyclic solver: rhs size mismatch");

  const BlockCyclicFactor factor(a);
  Vector x = factor.solve(rhs);
  // Two passes of iterative refinement keep the residual near machine level
  // even when the compact row's 1/h^2 entries dominate the pivots.
  for (int pass = 0; pass < 2; ++pass) x += factor.solve(rhs - a.apply(x));
  return x;
}

}  // namespace bbmb
