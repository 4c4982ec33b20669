#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bbmb/compact.hpp"
#include "bbmb/ops.hpp"

namespace bbmb {

struct NonConvergence : std::runtime_error {
  NonConvergence(const std::string& msg, double change) : std::runtime_error(msg), last_change(change) {}
  double last_change;
};

struct Diverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SpaceFunction = std::function<double(double)>;
using SpaceTimeFunction = std::function<double(double, double)>;

/// Problem data for u_t - mu*u_xxt + u*u_x + u_x - lambda*u_xx = f.
struct PdeParams {
  double mu = 1.0;      // dispersion coefficient, > 0
  double lambda = 1.0;  // viscosity coefficient, > 0
  SpaceFunction phi;                 // initial condition
  SpaceTimeFunction source;          // optional f(x, t); empty means zero
  SpaceTimeFunction exact;           // optional exact solution u(x, t)
};

struct IterationPolicy {
  double tol = 1e-12;            // max-norm change between Picard iterates
  int max_iter = 200;
  double divergence_guard = 1e8;  // abort when ||u||_inf exceeds this
};

/// The pair (u, w) at one time level; the compact relation A w = dxx u
/// holds at every stored level.
struct StateLevel {
  GridFunction u, w;
  double t = 0.0;
};

struct Trajectory {
  std::vector<StateLevel> levels;  // N+1 entries, equally spaced in t
  SpaceGrid grid;
  double tau = 0.0;
  std::vector<int> iteration_counts;  // per accepted step (empty for linear sweeps)
  double wall_seconds = 0.0;

  int steps() const { return static_cast<int>(levels.size()) - 1; }
  int max_iterations() const;
};

/// Samples phi at the nodes and lifts w^0 through the compact relation.
StateLevel initial_level(const SpaceGrid& grid, const PdeParams& params,
                         const CompactOperator& compact);

/// Crank-Nicolson sample of the source over [t_prev, t_prev + tau]: the
/// endpoint average (f^{l-1} + f^l)/2 at each node. Zero when no source.
GridFunction source_midpoint(const SpaceGrid& grid, const PdeParams& params,
                             double t_prev, double tau);

/// One fixed-point pass: solves the linear system in which both Psi terms
/// are frozen at the current iterate/previous level split, coupled with the
/// compact-relation block, for (u^{l,m+1}, w^{l,m+1}).
StateLevel picard_iterate(const StateLevel& prev, const StateLevel& current_guess,
                          const PdeParams& params, double tau,
                          const GridFunction& source_mid);

/// One nonlinear Crank-Nicolson compact step, solved by Picard iteration
/// from the initial iterate u^{l,0} = u^{l-1}.
std::pair<StateLevel, int> ncd_step(const StateLevel& prev, const PdeParams& params,
                                    double tau, const IterationPolicy& policy);

/// One fine-grid correction step with coefficients frozen at the half-step
/// interpolants (u_f)^{k-1/2}, (w_f)^{k-1/2}; a single linear solve.
StateLevel linearized_step(const StateLevel& prev, const GridFunction& frozen_u_mid,
                           const GridFunction& frozen_w_mid, const PdeParams& params,
                           double tau_f, const GridFunction& source_mid);

/// Full nonlinear compact trajectory with N steps of size tau.
Trajectory solve_ncd(const SpaceGrid& grid, const PdeParams& params, int steps,
                     double tau, const IterationPolicy& policy);

/// Max-norm residual of the nonlinear step equation between two levels;
/// independent check used by the tests.
double ncd_residual(const StateLevel& prev, const StateLevel& next, const PdeParams& params,
                    double tau, const GridFunction& source_mid);

}  // namespace bbmb
