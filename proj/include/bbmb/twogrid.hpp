#pragma once

#include "bbmb/schemes.hpp"

namespace bbmb {

struct PhaseTimings {
  double step1 = 0.0;  // coarse nonlinear solve
  double step2 = 0.0;  // temporal interpolation + compact lift
  double step3 = 0.0;  // fine linearized correction sweep
  double total = 0.0;
};

struct TtcdRun {
  Trajectory coarse;
  std::vector<GridFunction> interpolated_u;  // N_f + 1 levels
  std::vector<GridFunction> interpolated_w;
  Trajectory fine;
  PhaseTimings timings;
};

/// Linear Lagrange interpolation in time: fine index (q-1)*beta + r holds
/// (1 - r/beta) u_c^{q-1} + (r/beta) u_c^q; coincident indices q*beta copy
/// the coarse level bit-exactly.
std::vector<GridFunction> interpolate_in_time(const Trajectory& coarse, int beta_tau);

/// Recomputes w level-by-level through the compact relation A w = dxx u.
std::vector<GridFunction> lift_w(const std::vector<GridFunction>& u_levels,
                                 const CompactOperator& compact);

/// The full three-step pipeline: coarse nonlinear solve, interpolation with
/// compact lift, and the fine linearized correction sweep.
TtcdRun run_ttcd(const SpaceGrid& grid, const PdeParams& params, double horizon,
                 int coarse_steps, int beta_tau, const IterationPolicy& policy);

}  // namespace bbmb
