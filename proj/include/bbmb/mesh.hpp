#pragma once

#include <stdexcept>

namespace bbmb {

/// Uniform periodic spatial mesh over (a, a+L] with nodes x_p = a + p*h, p = 1..M.
/// Index arithmetic wraps modulo M; exactly M values are ever stored.
struct SpaceGrid {
  double a = 0.0;       // left endpoint
  double length = 0.0;  // period L
  int node_count = 0;   // M
  double h = 0.0;       // L / M

  static SpaceGrid make(double a, double length, int node_count);

  double node(long p) const { return a + static_cast<double>(p) * h; }

  /// Storage index in [0, M) of node p (any integer, wrapped periodically).
  int wrap(long p) const {
    long r = (p - 1) % node_count;
    if (r < 0) r += node_count;
    return static_cast<int>(r);
  }

  bool operator==(const SpaceGrid&) const = default;
};

/// Coarse/fine temporal mesh pair with integer step-size ratio beta_tau,
/// so fine index q*beta_tau coincides with coarse index q.
struct TimeGridPair {
  double horizon = 0.0;  // T
  int coarse_steps = 0;  // N_c
  int ratio = 0;         // beta_tau
  int fine_steps = 0;    // N_f = beta_tau * N_c
  double tau_c = 0.0;
  double tau_f = 0.0;

  static TimeGridPair make(double horizon, int coarse_steps, int ratio);

  double coarse_time(int q) const { return static_cast<double>(q) * tau_c; }
  double fine_time(int k) const { return static_cast<double>(k) * tau_f; }
};

SpaceGrid make_space_grid(double a, double length, int node_count);
TimeGridPair make_time_grids(double horizon, int coarse_steps, int ratio);

}  // namespace bbmb
