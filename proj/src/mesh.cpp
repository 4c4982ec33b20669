#include "bbmb/mesh.hpp"

namespace bbmb {

SpaceGrid SpaceGrid::make(double a, double length, int node_count) {
  if (!(length > 0.0)) throw std::invalid_argument("SpaceGrid: period length must be positive");
  if (node_count < 3) throw std::invalid_argument("SpaceGrid: need at least 3 nodes for a three-point stencil");
  SpaceGrid g;
  g.a = a;
  g.length = length;
  g.node_count = node_count;
  g.h = length / node_count;
  return g;
}

TimeGridPair TimeGridPair::make(double horizon, int coarse_steps, int ratio) {
  if (!(horizon > 0.0)) throw std::invalid_argument("TimeGridPair: horizon must be positive");
  if (coarse_steps < 1) throw std::invalid_argument("TimeGridPair: need at least one coarse step");
  if (ratio < 1) throw std::invalid_argument("TimeGridPair: step-size ratio must be a positive integer");
  TimeGridPair t;
  t.horizon = horizon;
  t.coarse_steps = coarse_steps;
  t.ratio = ratio;
  t.fine_steps = ratio * coarse_steps;
  t.tau_c = horizon / coarse_steps;
  t.tau_f = horizon / t.fine_steps;
  return t;
}

SpaceGrid make_space_grid(double a, double length, int node_count) {
  return SpaceGrid::make(a, length, node_count);
}

TimeGridPair make_time_grids(double horizon, int coarse_steps, int ratio) {
  return TimeGridPair::make(horizon, coarse_steps, ratio);
}

}  // namespace bbmb
