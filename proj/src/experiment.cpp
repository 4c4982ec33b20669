#include "bbmb/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <numbers>

namespace bbmb {
namespace {

struct RungSpec {
  int node_count;
  int coarse_steps;
};

struct RungResult {
  std::optional<Trajectory> ncd;
  std::optional<TtcdRun> ttcd;
};

std::vector<RungSpec> make_ladder(const ExperimentConfig& cfg, bool self_convergence) {
  int count = cfg.axis == SweepAxis::none ? 1 : cfg.levels;
  if (cfg.axis != SweepAxis::none && self_convergence) ++count;  // refined partner
  std::vector<RungSpec> ladder;
  ladder.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int scale = 1 << i;
    ladder.push_back({cfg.axis == SweepAxis::space ? cfg.node_count * scale : cfg.node_count,
                      cfg.axis == SweepAxis::time ? cfg.coarse_steps * scale
                                                  : cfg.coarse_steps});
  }
  return ladder;
}

RungResult execute_rung(const ExperimentConfig& cfg, const Problem& prob,
                        const RungSpec& rung) {
  const SpaceGrid grid = make_space_grid(prob.a, prob.length, rung.node_count);
  const TimeGridPair tg = make_time_grids(cfg.horizon, rung.coarse_steps, cfg.beta_tau);
  RungResult out;
  if (cfg.scheme != SchemeKind::ttcd)
    out.ncd = solve_ncd(grid, prob.params, tg.fine_steps, tg.tau_f, cfg.policy);
  if (cfg.scheme != SchemeKind::ncd)
    out.ttcd = run_ttcd(grid, prob.params, cfg.horizon, rung.coarse_steps, cfg.beta_tau,
                        cfg.policy);
  return out;
}

double trajectory_error(const std::vector<RungResult>& runs, size_t i, bool is_ttcd,
                        const ExperimentConfig& cfg, const Problem& prob) {
  auto traj = [&](size_t j) -> const Trajectory& {
    return is_ttcd ? runs[j].ttcd->fine : *runs[j].ncd;
  };
  if (prob.params.exact) return max_error_vs_exact(traj(i), prob.params.exact);
  if (cfg.axis == SweepAxis::time) return self_error_time(traj(i), traj(i + 1));
  if (cfg.axis == SweepAxis::space) return self_error_space(traj(i), traj(i + 1));
  return 0.0;  // single run of a problem with no exact solution
}

void append_energy(RunReport& report, const std::string& scheme, const Trajectory& traj,
                   const EnergySeries& series) {
  for (size_t k = 0; k < traj.levels.size(); ++k)
    report.energy.push_back({scheme, traj.levels[k].t, series.values[k]});
}

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

Problem resolve_problem(const ExperimentConfig& cfg) {
  if (cfg.problem == "manufactured") return manufactured_problem(cfg.mu, cfg.lambda);
  if (cfg.problem == "soliton") return soliton_problem(cfg.mu, cfg.lambda);
  return custom_problem(cfg.mu, cfg.lambda, cfg.a, cfg.length, cfg.amplitude);
}

RunReport run_experiment(const ExperimentConfig& cfg, bool serial) {
  const Problem prob = resolve_problem(cfg);
  const bool self_convergence = !prob.params.exact && cfg.axis != SweepAxis::none;
  const std::vector<RungSpec> ladder = make_ladder(cfg, self_convergence);

  std::vector<RungResult> runs(ladder.size());
  const size_t workers = serial ? 1 : static_cast<size_t>(cfg.threads);
  for (size_t start = 0; start < ladder.size(); start += workers) {
    std::vector<std::future<RungResult>> batch;
    const size_t end = std::min(start + workers, ladder.size());
    for (size_t i = start; i < end; ++i)
      batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                 execute_rung, std::cref(cfg), std::cref(prob), ladder[i]));
    for (size_t i = start; i < end; ++i) runs[i] = batch[i - start].get();
  }

  RunReport report;
  report.config = cfg;
  const size_t reported = self_convergence ? ladder.size() - 1 : ladder.size();
  std::vector<double> prev_error(2, 0.0);  // [0] = ncd, [1] = ttcd
  for (size_t i = 0; i < reported; ++i) {
    const SpaceGrid grid = make_space_grid(prob.a, prob.length, ladder[i].node_count);
    const TimeGridPair tg = make_time_grids(cfg.horizon, ladder[i].coarse_steps, cfg.beta_tau);
    for (int which = 0; which < 2; ++which) {
      const bool is_ttcd = which == 1;
      if (is_ttcd ? !runs[i].ttcd.has_value() : !runs[i].ncd.has_value()) continue;
      const Trajectory& traj = is_ttcd ? runs[i].ttcd->fine : *runs[i].ncd;
      SchemeRow row;
      row.scheme = is_ttcd ? "ttcd" : "ncd";
      row.h = grid.h;
      row.tau_c = tg.tau_c;
      row.tau_f = tg.tau_f;
      row.error = trajectory_error(runs, i, is_ttcd, cfg, prob);
      if (i > 0 && prev_error[which] > 0.0 && row.error > 0.0) {
        row.has_rate = true;
        row.rate = std::log2(prev_error[which] / row.error);
      }
      prev_error[which] = row.error;
      row.max_iterations =
          is_ttcd ? runs[i].ttcd->coarse.max_iterations() : traj.max_iterations();
      const EnergySeries series = energy_series(traj, cfg.mu, cfg.lambda, traj.tau);
      row.energy_drift = series.max_absolute_drift();
      row.seconds = is_ttcd ? runs[i].ttcd->timings.total : traj.wall_seconds;
      if (i == 0) append_energy(report, row.scheme, traj, series);
      report.rows.push_back(std::move(row));
    }
    if (runs[i].ncd && runs[i].ttcd) {
      double parity = 0.0;
      const Trajectory& fine = runs[i].ttcd->fine;
      for (size_t k = 0; k < fine.levels.size(); ++k)
        parity = std::max(parity, (fine.levels[k].u.values - runs[i].ncd->levels[k].u.values)
                                      .cwiseAbs()
                                      .maxCoeff());
      report.parity.push_back(parity);
    }
  }
  return report;
}

void write_csv(const RunReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);

  std::ofstream table(base / "table.csv", std::ios::binary);
  table << "scheme,h,tau_c,tau_f,error,rate,max_iter,energy_drift,cpu_seconds\n";
  for (const SchemeRow& row : report.rows) {
    table << row.scheme << ',' << format("%.10g", row.h) << ',' << format("%.10g", row.tau_c)
          << ',' << format("%.10g", row.tau_f) << ',' << format("%.5e", row.error) << ','
          << (row.has_rate ? format("%.4f", row.rate) : std::string()) << ','
          << row.max_iterations << ',' << format("%.5e", row.energy_drift) << ','
          << format("%.2f", row.seconds) << '\n';
  }

  std::ofstream energy(base / "energy.csv", std::ios::binary);
  energy << "scheme,t,E\n";
  for (const RunReport::EnergySample& s : report.energy)
    energy << s.scheme << ',' << format("%.10g", s.t) << ',' << format("%.11e", s.value)
           << '\n';

  std::ofstream pareto(base / "pareto.csv", std::ios::binary);
  pareto << "scheme,cpu_seconds,error\n";
  for (const SchemeRow& row : report.rows)
    pareto << row.scheme << ',' << format("%.2f", row.seconds) << ','
           << format("%.5e", row.error) << '\n';
}

double perturbation_study(const ExperimentConfig& cfg, double zeta_amp, bool serial) {
  Problem base = resolve_problem(cfg);
  Problem perturbed = base;
  const SpaceFunction phi = base.params.phi;
  const double a = base.a, length = base.length;
  perturbed.params.phi = [phi, zeta_amp, a, length](double x) {
    return phi(x) + zeta_amp * std::sin(2.0 * std::numbers::pi * (x - a) / length);
  };

  const SpaceGrid grid = make_space_grid(base.a, base.length, cfg.node_count);
  auto solve_one = [&](const Problem& prob) -> Trajectory {
    if (cfg.scheme == SchemeKind::ncd) {
      const TimeGridPair tg = make_time_grids(cfg.horizon, cfg.coarse_steps, cfg.beta_tau);
      return solve_ncd(grid, prob.params, tg.fine_steps, tg.tau_f, cfg.policy);
    }
    return run_ttcd(grid, prob.params, cfg.horizon, cfg.coarse_steps, cfg.beta_tau, cfg.policy)
        .fine;
  };

  if (!serial && cfg.threads > 1) {
    auto fut = std::async(std::launch::async, solve_one, std::cref(perturbed));
    const Trajectory base_run = solve_one(base);
    return perturbation_response(base_run, fut.get());
  }
  const Trajectory base_run = solve_one(base);
  const Trajectory pert_run = solve_one(perturbed);
  return perturbation_response(base_run, pert_run);
}

}  // namespace bbmb
