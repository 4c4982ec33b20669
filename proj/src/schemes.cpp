#include "bbmb/schemes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace bbmb {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void add_identity(CyclicTridiagonal& k, double s) { k.diag.array() += s; }

// s * Delta_x
void add_central(CyclicTridiagonal& k, double s, double h) {
  k.sup.array() += s / (2.0 * h);
  k.sub.array() -= s / (2.0 * h);
}

int wrap_l(int i, int m) { return i == 0 ? m - 1 : i - 1; }
int wrap_r(int i, int m) { return i == m - 1 ? 0 : i + 1; }

// s * Psi(c, .): unknown in the second slot.
void add_psi_frozen_first(CyclicTridiagonal& k, const Vector& c, double s, double h) {
  const int m = static_cast<int>(c.size());
  const double f = s / (6.0 * h);
  for (int i = 0; i < m; ++i) {
    k.sup[i] += f * (c[i] + c[wrap_r(i, m)]);
    k.sub[i] -= f * (c[i] + c[wrap_l(i, m)]);
  }
}

// s * Psi(., c): unknown in the first slot.
void add_psi_frozen_second(CyclicTridiagonal& k, const Vector& c, double s, double h) {
  const int m = static_cast<int>(c.size());
  const double f = s / (6.0 * h);
  for (int i = 0; i < m; ++i) {
    const double cl = c[wrap_l(i, m)];
    const double cr = c[wrap_r(i, m)];
    k.diag[i] += f * (cr - cl);
    k.sup[i] += f * cr;
    k.sub[i] -= f * cl;
  }
}

// Interleaves the PDE row (kxx, kxy) with the compact-relation row
// (-dxx, I + h^2/12 dxx) into one 2x2-block cyclic tridiagonal system.
BlockCyclicTridiagonal couple_with_compact_row(const CyclicTridiagonal& kxx,
                                               const CyclicTridiagonal& kxy, double h) {
  const int m = kxx.size();
  const double inv_h2 = 1.0 / (h * h);
  BlockCyclicTridiagonal a = BlockCyclicTridiagonal::zero(m);
  for (int i = 0; i < m; ++i) {
    a.sub[i] << kxx.sub[i], kxy.sub[i], -inv_h2, 1.0 / 12.0;
    a.diag[i] << kxx.diag[i], kxy.diag[i], 2.0 * inv_h2, 5.0 / 6.0;
    a.sup[i] << kxx.sup[i], kxy.sup[i], -inv_h2, 1.0 / 12.0;
  }
  return a;
}

StateLevel solve_coupled(const SpaceGrid& grid, const CyclicTridiagonal& kxx,
                         const CyclicTridiagonal& kxy, const Vector& rhs1, double t_next) {
  const int m = grid.node_count;
  const BlockCyclicTridiagonal a = couple_with_compact_row(kxx, kxy, grid.h);
  Vector rhs = Vector::Zero(2 * m);
  for (int i = 0; i < m; ++i) rhs[2 * i] = rhs1[i];
  const Vector z = solve_block_cyclic(a, rhs);
  Vector u(m), w(m);
  for (int i = 0; i < m; ++i) {
    u[i] = z[2 * i];
    w[i] = z[2 * i + 1];
  }
  return {GridFunction(grid, std::move(u)), GridFunction(grid, std::move(w)), t_next};
}

}  // namespace

int Trajectory::max_iterations() const {
  if (iteration_counts.empty()) return 0;
  return *std::max_element(iteration_counts.begin(), iteration_counts.end());
}

StateLevel initial_level(const SpaceGrid& grid, const PdeParams& params,
                         const CompactOperator& compact) {
  Vector u(grid.node_count);
  for (int p = 1; p <= grid.node_count; ++p) {
    const double v = params.phi(grid.node(p));
    if (!std::isfinite(v)) throw std::domain_error("initial condition sample is not finite");
    u[p - 1] = v;
  }
  GridFunction u0(grid, std::move(u));
  GridFunction w0 = compact.second_derivative(u0);
  return {std::move(u0), std::move(w0), 0.0};
}

GridFunction source_midpoint(const SpaceGrid& grid, const PdeParams& params,
                             double t_prev, double tau) {
  if (!params.source) return GridFunction::zero(grid);
  Vector f(grid.node_count);
  for (int p = 1; p <= grid.node_count; ++p) {
    const double x = grid.node(p);
    f[p - 1] = 0.5 * (params.source(x, t_prev) + params.source(x, t_prev + tau));
  }
  return {grid, std::move(f)};
}

StateLevel picard_iterate(const StateLevel& prev, const StateLevel& current_guess,
                          const PdeParams& params, double tau,
                          const GridFunction& source_mid) {
  ops::require_same_grid(prev.u, current_guess.u);
  ops::require_same_grid(prev.u, source_mid);
  const SpaceGrid& grid = prev.u.grid;
  const double h = grid.h;
  const double h2 = h * h;
  const int m = grid.node_count;
  const Vector& a = prev.u.values;
  const Vector& b = prev.w.values;
  const Vector& g = current_guess.u.values;

  CyclicTridiagonal kxx = CyclicTridiagonal::zero(m);
  add_identity(kxx, 1.0 / tau);
  add_psi_frozen_second(kxx, g, 0.25, h);
  add_psi_frozen_second(kxx, a, 0.25, h);
  add_psi_frozen_first(kxx, a, 0.25, h);
  add_psi_frozen_first(kxx, b, -h2 / 8.0, h);
  add_central(kxx, 0.5, h);

  CyclicTridiagonal kxy = CyclicTridiagonal::zero(m);
  add_identity(kxy, -params.mu / tau - 0.5 * params.lambda);
  add_psi_frozen_second(kxy, g, -h2 / 8.0, h);
  add_psi_frozen_second(kxy, a, -h2 / 8.0, h);
  add_central(kxy, -h2 / 12.0, h);

  const GridFunction psi_aa = ops::psi(prev.u, prev.u);
  const GridFunction psi_ba = ops::psi(prev.w, prev.u);
  const GridFunction dxa = ops::delta_x_central(prev.u);
  const GridFunction dxb = ops::delta_x_central(prev.w);
  const Vector rhs1 = source_mid.values + a / tau - (params.mu / tau) * b -
                      0.25 * psi_aa.values + (h2 / 8.0) * psi_ba.values - 0.5 * dxa.values +
                      (h2 / 12.0) * dxb.values + 0.5 * params.lambda * b;

  return solve_coupled(grid, kxx, kxy, rhs1, prev.t + tau);
}

std::pair<StateLevel, int> ncd_step(const StateLevel& prev, const PdeParams& params,
                                    double tau, const IterationPolicy& policy) {
  const GridFunction f_mid = source_midpoint(prev.u.grid, params, prev.t, tau);
  StateLevel guess = prev;  // u^{l,0} = u^{l-1}
  double change = 0.0;
  double prev_change = std::numeric_limits<double>::infinity();
  for (int m = 0; m < policy.max_iter; ++m) {
    StateLevel next = picard_iterate(prev, guess, params, tau, f_mid);
    change = (next.u.values - guess.u.values).cwiseAbs().maxCoeff();
    if (ops::norm_max(next.u) > policy.divergence_guard)
      throw Diverged("solution magnitude exceeded the divergence guard");
    guess = std::move(next);
    if (change <= policy.tol) return {std::move(guess), m + 1};
    // Rounding noise in the per-iteration solves puts a floor on the
    // achievable change; once the change stops decreasing near that floor
    // the iterate is converged to working precision.
    if (change >= prev_change && change <= 1e3 * policy.tol)
      return {std::move(guess), m + 1};
    prev_change = change;
  }
  throw NonConvergence("fixed-point iteration hit the iteration cap", change);
}

StateLevel linearized_step(const StateLevel& prev, const GridFunction& frozen_u_mid,
                           const GridFunction& frozen_w_mid, const PdeParams& params,
                           double tau_f, const GridFunction& source_mid) {
  ops::require_same_grid(prev.u, frozen_u_mid);
  ops::require_same_grid(prev.u, frozen_w_mid);
  const SpaceGrid& grid = prev.u.grid;
  const double h = grid.h;
  const double h2 = h * h;
  const int m = grid.node_count;
  const Vector& a = prev.u.values;
  const Vector& b = prev.w.values;

  CyclicTridiagonal kxx = CyclicTridiagonal::zero(m);
  add_identity(kxx, 1.0 / tau_f);
  add_psi_frozen_first(kxx, frozen_u_mid.values, 0.5, h);
  add_psi_frozen_first(kxx, frozen_w_mid.values, -h2 / 4.0, h);
  add_central(kxx, 0.5, h);

  CyclicTridiagonal kxy = CyclicTridiagonal::zero(m);
  add_identity(kxy, -params.mu / tau_f - 0.5 * params.lambda);
  add_central(kxy, -h2 / 12.0, h);

  const GridFunction psi_va = ops::psi(frozen_u_mid, prev.u);
  const GridFunction psi_wa = ops::psi(frozen_w_mid, prev.u);
  const GridFunction dxa = ops::delta_x_central(prev.u);
  const GridFunction dxb = ops::delta_x_central(prev.w);
  const Vector rhs1 = source_mid.values + a / tau_f - (params.mu / tau_f) * b -
                      0.5 * psi_va.values + (h2 / 4.0) * psi_wa.values - 0.5 * dxa.values +
                      (h2 / 12.0) * dxb.values + 0.5 * params.lambda * b;

  return solve_coupled(grid, kxx, kxy, rhs1, prev.t + tau_f);
}

Trajectory solve_ncd(const SpaceGrid& grid, const PdeParams& params, int steps,
                     double tau, const IterationPolicy& policy) {
  const auto t0 = Clock::now();
  const CompactOperator compact(grid);
  Trajectory traj;
  traj.grid = grid;
  traj.tau = tau;
  traj.levels.reserve(steps + 1);
  traj.levels.push_back(initial_level(grid, params, compact));
  for (int l = 1; l <= steps; ++l) {
    try {
      auto [next, iters] = ncd_step(traj.levels.back(), params, tau, policy);
      next.t = l * tau;  // avoid accumulating additions
      traj.levels.push_back(std::move(next));
      traj.iteration_counts.push_back(iters);
    } catch (const NonConvergence& e) {
      throw NonConvergence("time level " + std::to_string(l) + ": " + e.what(), e.last_change);
    } catch (const Diverged& e) {
      throw Diverged("time level " + std::to_string(l) + ": " + e.what());
    }
  }
  traj.wall_seconds = seconds_since(t0);
  return traj;
}

double ncd_residual(const StateLevel& prev, const StateLevel& next, const PdeParams& params,
                    double tau, const GridFunction& source_mid) {
  const SpaceGrid& grid = prev.u.grid;
  const double h2 = grid.h * grid.h;
  GridFunction u_mid(grid, 0.5 * (next.u.values + prev.u.values));
  GridFunction w_mid(grid, 0.5 * (next.w.values + prev.w.values));
  const Vector res = (next.u.values - prev.u.values) / tau -
                     params.mu * (next.w.values - prev.w.values) / tau +
                     ops::psi(u_mid, u_mid).values - (h2 / 2.0) * ops::psi(w_mid, u_mid).values +
                     ops::delta_x_central(u_mid).values -
                     (h2 / 6.0) * ops::delta_x_central(w_mid).values -
                     params.lambda * w_mid.values - source_mid.values;
  return res.cwiseAbs().maxCoeff();
}

}  // namespace bbmb
