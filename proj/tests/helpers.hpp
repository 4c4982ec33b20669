#pragma once

#include <random>

#include "bbmb/ops.hpp"

namespace bbmb::testing {

inline GridFunction random_grid_function(const SpaceGrid& g, std::mt19937& rng,
                                         double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(g.node_count);
  for (int i = 0; i < g.node_count; ++i) v[i] = dist(rng);
  return {g, v};
}

inline GridFunction zero_mean(GridFunction f) {
  f.values.array() -= f.values.mean();
  return f;
}

inline GridFunction sample(const SpaceGrid& g, const std::function<double(double)>& fn) {
  Vector v(g.node_count);
  for (int p = 1; p <= g.node_count; ++p) v[p - 1] = fn(g.node(p));
  return {g, v};
}

}  // namespace bbmb::testing
