#include <doctest.h>

#include <cmath>

#include "bbmb/diagnostics.hpp"
#include "bbmb/problems.hpp"
#include "bbmb/twogrid.hpp"
#include "helpers.hpp"

using namespace bbmb;

TEST_CASE("initial energy matches the frozen single-hump values") {
  // E^0 for the sech^2 initial profile on [-30,30] at h = 1/10, computed
  // independently from the definition with a high-precision prototype.
  const struct {
    double mu, lambda, expected;
  } cases[] = {
      {1.0, 1.0, 2.903703684187},
      {0.1, 0.1, 2.690370368419},
      {0.01, 0.01, 2.669037036842},
  };
  for (const auto& c : cases) {
    const Problem prob = soliton_problem(c.mu, c.lambda);
    const SpaceGrid g = make_space_grid(prob.a, prob.length, 600);
    const CompactOperator compact(g);
    Trajectory traj;
    traj.grid = g;
    traj.tau = 1.0;
    traj.levels.push_back(initial_level(g, prob.params, compact));
    const EnergySeries series = energy_series(traj, c.mu, c.lambda, traj.tau);
    CHECK(std::abs(series.values[0] - c.expected) <= 1e-9);
  }
}

TEST_CASE("energy is conserved along a short dissipative soliton run") {
  const Problem prob = soliton_problem(0.1, 0.1);
  const SpaceGrid g = make_space_grid(prob.a, prob.length, 300);
  const Trajectory traj = solve_ncd(g, prob.params, 20, 0.05, {});
  const EnergySeries series = energy_series(traj, 0.1, 0.1, traj.tau);
  REQUIRE(series.values.size() == 21);
  CHECK(series.max_absolute_drift() <= 1e-10);
  CHECK(series.max_relative_drift() <= 1e-10);
  CHECK(series.dissipation > 0.0);
}

TEST_CASE("max error against the exact solution") {
  const Problem prob = manufactured_problem(1.0, 1.0);
  const SpaceGrid g = make_space_grid(prob.a, prob.length, 50);
  const CompactOperator compact(g);
  Trajectory traj;
  traj.grid = g;
  traj.tau = 0.5;
  traj.levels.push_back(initial_level(g, prob.params, compact));
  CHECK(max_error_vs_exact(traj, prob.params.exact) <= 1e-14);  // t = 0 is sampled exactly
}

TEST_CASE("temporal self-error compares coincident levels") {
  const SpaceGrid g = make_space_grid(0.0, 1.0, 8);
  auto make_traj = [&](int steps, double bump) {
    Trajectory traj;
    traj.grid = g;
    traj.tau = 1.0 / steps;
    for (int k = 0; k <= steps; ++k) {
      StateLevel lev;
      lev.u = GridFunction(g, Vector::Constant(8, k * traj.tau + bump * k));
      lev.w = GridFunction::zero(g);
      lev.t = k * traj.tau;
      traj.levels.push_back(std::move(lev));
    }
    return traj;
  };
  const Trajectory coarse = make_traj(4, 0.01);
  const Trajectory fine = make_traj(8, 0.0);
  // Level k of the coarse run deviates from level 2k of the fine run by 0.01 k.
  CHECK(self_error_time(coarse, fine) == doctest::Approx(0.04).epsilon(1e-12));
  CHECK_THROWS_AS(self_error_time(coarse, coarse), std::invalid_argument);
}

TEST_CASE("spatial self-error compares nested nodes") {
  const SpaceGrid g1 = make_space_grid(0.0, 2.0, 8);
  const SpaceGrid g2 = make_space_grid(0.0, 2.0, 16);
  auto sample_traj = [](const SpaceGrid& g, double shift) {
    Trajectory traj;
    traj.grid = g;
    traj.tau = 1.0;
    StateLevel lev;
    Vector v(g.node_count);
    for (int p = 1; p <= g.node_count; ++p) v[p - 1] = std::sin(g.node(p)) + shift;
    lev.u = GridFunction(g, v);
    lev.w = GridFunction::zero(g);
    traj.levels.push_back(std::move(lev));
    return traj;
  };
  const Trajectory coarse = sample_traj(g1, 0.25);
  const Trajectory fine = sample_traj(g2, 0.0);
  // x_p on the coarse grid coincides with x_{2p} on the fine grid.
  CHECK(self_error_space(coarse, fine) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(self_error_space(coarse, coarse), std::invalid_argument);
}

TEST_CASE("observed rates are base-2 logarithms of error ratios") {
  const std::vector<double> errors = {1.0, 0.25, 0.0625};
  const std::vector<double> r = rates(errors);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(2.0));
  CHECK(r[1] == doctest::Approx(2.0));
  CHECK_THROWS_AS(rates({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("perturbation response measures the max discrete-L2 deviation") {
  const SpaceGrid g = make_space_grid(0.0, 1.0, 4);
  Trajectory base, pert;
  base.grid = pert.grid = g;
  base.tau = pert.tau = 1.0;
  for (int k = 0; k < 2; ++k) {
    StateLevel a, b;
    a.u = GridFunction::zero(g);
    a.w = GridFunction::zero(g);
    b.u = GridFunction(g, Vector::Constant(4, k == 1 ? 0.5 : 0.0));
    b.w = GridFunction::zero(g);
    base.levels.push_back(a);
    pert.levels.push_back(b);
  }
  // ||0.5||_{L2(0,1)} = 0.5 on the unit period.
  CHECK(perturbation_response(base, pert) == doctest::Approx(0.5).epsilon(1e-12));
}
