#include "bbmb/diagnostics.hpp"

#include <cmath>

namespace bbmb {
namespace {

double level_energy_core(const GridFunction& u, const GridFunction& w, double h) {
  const double h2 = h * h;
  return ops::inner_h1(u, u) + (h2 / 12.0) * ops::inner(w, w) -
         (h2 * h2 / 144.0) * ops::inner_h1(w, w);
}

}  // namespace

double EnergySeries::max_absolute_drift() const {
  double d = 0.0;
  for (double v : values) d = std::max(d, std::abs(v - values.front()));
  return d;
}

double EnergySeries::max_relative_drift() const {
  const double base = std::abs(values.front());
  if (base == 0.0) return max_absolute_drift();
  return max_absolute_drift() / base;
}

EnergySeries energy_series(const Trajectory& traj, double mu, double lambda, double tau) {
  EnergySeries s;
  s.values.reserve(traj.levels.size());
  const double h = traj.grid.h;
  for (size_t k = 0; k < traj.levels.size(); ++k) {
    const StateLevel& lev = traj.levels[k];
    if (k > 0) {
      const StateLevel& prev = traj.levels[k - 1];
      const GridFunction u_mid(traj.grid, 0.5 * (lev.u.values + prev.u.values));
      const GridFunction w_mid(traj.grid, 0.5 * (lev.w.values + prev.w.values));
      s.dissipation += 2.0 * lambda * tau * level_energy_core(u_mid, w_mid, h);
    }
    s.values.push_back(ops::inner(lev.u, lev.u) + mu * level_energy_core(lev.u, lev.w, h) +
                       s.dissipation);
  }
  return s;
}

EnergySeries energy_fine(const Trajectory& traj, double mu, double lambda, double tau_f) {
  return energy_series(traj, mu, lambda, tau_f);
}

EnergySeries energy_coarse(const Trajectory& traj, double mu, double lambda, double tau_c) {
  return energy_series(traj, mu, lambda, tau_c);
}

double max_error_vs_exact(const Trajectory& traj, const SpaceTimeFunction& exact) {
  double err = 0.0;
  for (const StateLevel& lev : traj.levels)
    for (int p = 1; p <= traj.grid.node_count; ++p)
      err = std::max(err, std::abs(lev.u.values[p - 1] - exact(traj.grid.node(p), lev.t)));
  return err;
}

double self_error_time(const Trajectory& run, const Trajectory& refined) {
  if (!(run.grid == refined.grid))
    throw std::invalid_argument("self_error_time: spatial grids differ");
  if (refined.steps() != 2 * run.steps())
    throw std::invalid_argument("self_error_time: refined run must have exactly 2x the levels");
  double err = 0.0;
  for (int k = 0; k <= run.steps(); ++k)
    err = std::max(err,
                   (run.levels[k].u.values - refined.levels[2 * k].u.values).cwiseAbs().maxCoeff());
  return err;
}

double self_error_space(const Trajectory& run_h, const Trajectory& run_h_half) {
  if (run_h.steps() != run_h_half.steps())
    throw std::invalid_argument("self_error_space: time grids differ");
  if (run_h_half.grid.node_count != 2 * run_h.grid.node_count)
    throw std::invalid_argument("self_error_space: refined run must have exactly 2x the nodes");
  double err = 0.0;
  for (int k = 0; k <= run_h.steps(); ++k)
    for (int p = 1; p <= run_h.grid.node_count; ++p)
      err = std::max(err, std::abs(run_h.levels[k].u.values[p - 1] -
                                   run_h_half.levels[k].u.values[2 * p - 1]));
  return err;
}

std::vector<double> rates(const std::vector<double>& errors) {
  std::vector<double> out;
  for (size_t i = 0; i + 1 < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !(errors[i + 1] > 0.0))
      throw std::invalid_argument("rates: errors must be positive");
    out.push_back(std::log2(errors[i] / errors[i + 1]));
  }
  return out;
}

double perturbation_response(const Trajectory& base, const Trajectory& perturbed) {
  if (!(base.grid == perturbed.grid) || base.levels.size() != perturbed.levels.size())
    throw std::invalid_argument("perturbation_response: shape mismatch");
  double r = 0.0;
  for (size_t k = 0; k < base.levels.size(); ++k) {
    const GridFunction diff(base.grid,
                            perturbed.levels[k].u.values - base.levels[k].u.values);
    r = std::max(r, ops::norm_l2(diff));
  }
  return r;
}

}  // namespace bbmb
