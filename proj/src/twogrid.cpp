#include "bbmb/twogrid.hpp"

#include <chrono>

namespace bbmb {
namespace {
using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}
}  // namespace

std::vector<GridFunction> interpolate_in_time(const Trajectory& coarse, int beta_tau) {
  if (beta_tau < 1) throw std::invalid_argument("interpolate_in_time: ratio must be >= 1");
  const int n_c = coarse.steps();
  if (n_c < 1) throw std::invalid_argument("interpolate_in_time: coarse trajectory is empty");
  const int n_f = beta_tau * n_c;
  std::vector<GridFunction> out;
  out.reserve(n_f + 1);
  for (int k = 0; k <= n_f; ++k) {
    const int q = k / beta_tau;
    const int r = k % beta_tau;
    if (r == 0) {
      out.push_back(coarse.levels[q].u);  // bit-exact copy, no re-rounding
    } else {
      const double wgt = static_cast<double>(r) / beta_tau;
      out.emplace_back(coarse.grid, (1.0 - wgt) * coarse.levels[q].u.values +
                                        wgt * coarse.levels[q + 1].u.values);
    }
  }
  return out;
}

std::vector<GridFunction> lift_w(const std::vector<GridFunction>& u_levels,
                                 const CompactOperator& compact) {
  std::vector<GridFunction> out;
  out.reserve(u_levels.size());
  for (const GridFunction& u : u_levels) out.push_back(compact.second_derivative(u));
  return out;
}

TtcdRun run_ttcd(const SpaceGrid& grid, const PdeParams& params, double horizon,
                 int coarse_steps, int beta_tau, const IterationPolicy& policy) {
  const TimeGridPair tg = TimeGridPair::make(horizon, coarse_steps, beta_tau);
  TtcdRun run;
  const auto t_all = Clock::now();

  auto t0 = Clock::now();
  run.coarse = solve_ncd(grid, params, tg.coarse_steps, tg.tau_c, policy);
  run.timings.step1 = seconds_since(t0);

  t0 = Clock::now();
  const CompactOperator compact(grid);
  run.interpolated_u = interpolate_in_time(run.coarse, beta_tau);
  run.interpolated_w = lift_w(run.interpolated_u, compact);
  run.timings.step2 = seconds_since(t0);

  t0 = Clock::now();
  run.fine.grid = grid;
  run.fine.tau = tg.tau_f;
  run.fine.levels.reserve(tg.fine_steps + 1);
  run.fine.levels.push_back(run.coarse.levels.front());
  for (int k = 1; k <= tg.fine_steps; ++k) {
    const GridFunction frozen_u(grid, 0.5 * (run.interpolated_u[k].values +
                                             run.interpolated_u[k - 1].values));
    const GridFunction frozen_w(grid, 0.5 * (run.interpolated_w[k].values +
                                             run.interpolated_w[k - 1].values));
    const GridFunction f_mid =
        source_midpoint(grid, params, (k - 1) * tg.tau_f, tg.tau_f);
    StateLevel next = linearized_step(run.fine.levels.back(), frozen_u, frozen_w, params,
                                      tg.tau_f, f_mid);
    next.t = k * tg.tau_f;
    run.fine.levels.push_back(std::move(next));
  }
  run.timings.step3 = seconds_since(t0);
  run.timings.total = seconds_since(t_all);
  run.fine.wall_seconds = run.timings.total;
  return run;
}

}  // namespace bbmb
