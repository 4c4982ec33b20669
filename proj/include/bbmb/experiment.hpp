#pragma once

#include "bbmb/config.hpp"
#include "bbmb/diagnostics.hpp"
#include "bbmb/problems.hpp"
#include "bbmb/twogrid.hpp"

namespace bbmb {

/// One CSV row: a scheme evaluated on one ladder rung.
struct SchemeRow {
  std::string scheme;  // "ncd" or "ttcd"
  double h = 0.0;
  double tau_c = 0.0;
  double tau_f = 0.0;
  double error = 0.0;  // Error_inf (exact) or Error_{inf,t}/Error_{inf,s} (self)
  bool has_rate = false;
  double rate = 0.0;
  int max_iterations = 0;
  double energy_drift = 0.0;
  double seconds = 0.0;
};

struct RunReport {
  ExperimentConfig config;
  std::vector<SchemeRow> rows;  // rung-major, ncd before ttcd within a rung

  /// Energy series of the first rung's run(s): (scheme, t, E).
  struct EnergySample {
    std::string scheme;
    double t;
    double value;
  };
  std::vector<EnergySample> energy;

  /// Per rung when both schemes ran: max_k ||u_ttcd^k - u_ncd^k||_inf.
  std::vector<double> parity;
};

/// Resolves the configured problem (builtin or custom) to concrete PDE data.
Problem resolve_problem(const ExperimentConfig& cfg);

/// Executes the configured scheme(s) over the sweep ladder. Rungs fan out
/// over up to `threads` workers when `serial` is false; row order is always
/// the deterministic config order.
RunReport run_experiment(const ExperimentConfig& cfg, bool serial = false);

/// Writes table.csv, energy.csv, and pareto.csv under `dir`.
void write_csv(const RunReport& report, const std::string& dir);

/// Runs the configured scheme twice — unperturbed and with initial data
/// phi + zeta_amp * sin(2 pi (x - a) / L) — and returns the max discrete-L2
/// response over all fine levels.
double perturbation_study(const ExperimentConfig& cfg, double zeta_amp, bool serial = false);

}  // namespace bbmb
