#pragma once

#include "bbmb/schemes.hpp"

namespace bbmb {

/// Discrete energy along a trajectory: E^k = ||u^k||^2
///   + mu (|u^k|_1^2 + h^2/12 ||w^k||^2 - h^4/144 |w^k|_1^2)
///   + 2 lambda tau sum_{n<=k} (|u^{n-1/2}|_1^2 + h^2/12 ||w^{n-1/2}||^2
///                              - h^4/144 |w^{n-1/2}|_1^2),
/// with the dissipation sum accumulated incrementally.
struct EnergySeries {
  std::vector<double> values;
  double dissipation = 0.0;  // final accumulated viscous term

  double max_absolute_drift() const;
  double max_relative_drift() const;
};

EnergySeries energy_series(const Trajectory& traj, double mu, double lambda, double tau);

/// Fine-grid invariant E^k (tau = tau_f).
EnergySeries energy_fine(const Trajectory& traj, double mu, double lambda, double tau_f);

/// Coarse-grid invariant (tau = tau_c); same formula on the coarse levels.
EnergySeries energy_coarse(const Trajectory& traj, double mu, double lambda, double tau_c);

/// max over all nodes and all levels of |u_p^k - U(x_p, t_k)|.
double max_error_vs_exact(const Trajectory& traj, const SpaceTimeFunction& exact);

/// Temporal self-error: compares level k of `run` against level 2k of the
/// run computed with half the step on the same spatial grid.
double self_error_time(const Trajectory& run, const Trajectory& refined);

/// Spatial self-error: compares node p of `run_h` against node 2p of the
/// run on the halved mesh (nested by the x_p = a + p h convention).
double self_error_space(const Trajectory& run_h, const Trajectory& run_h_half);

/// Observed orders log2(e_i / e_{i+1}) between adjacent 2:1 refinements.
std::vector<double> rates(const std::vector<double>& errors);

/// max over levels of ||u_pert^k - u_base^k|| (discrete L2).
double perturbation_response(const Trajectory& base, const Trajectory& perturbed);

}  // namespace bbmb
