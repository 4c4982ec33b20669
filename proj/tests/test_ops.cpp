#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"

using namespace bbmb;
using bbmb::testing::random_grid_function;
using bbmb::testing::sample;
using bbmb::testing::zero_mean;

namespace {
constexpr double kPi = std::numbers::pi;
const int kSizes[] = {8, 37, 128};
}  // namespace

TEST_CASE("difference operators on a hand-checked 4-point example") {
  const SpaceGrid g = make_space_grid(0.0, 4.0, 4);  // h = 1
  GridFunction w(g, Vector(4));
  w.values << 1.0, 4.0, 9.0, 16.0;  // w_1..w_4

  const GridFunction dxx = ops::delta_xx(w);
  CHECK(dxx.values[0] == doctest::Approx(16.0 - 2.0 + 4.0));  // wraps to w_4
  CHECK(dxx.values[1] == doctest::Approx(1.0 - 8.0 + 9.0));
  CHECK(dxx.values[3] == doctest::Approx(9.0 - 32.0 + 1.0));  // wraps to w_1

  const GridFunction dc = ops::delta_x_central(w);
  CHECK(dc.values[0] == doctest::Approx((4.0 - 16.0) / 2.0));
  CHECK(dc.values[2] == doctest::Approx((16.0 - 4.0) / 2.0));

  const GridFunction dh = ops::delta_x_half(w);
  CHECK(dh.values[0] == doctest::Approx(1.0 - 16.0));
  CHECK(dh.values[1] == doctest::Approx(4.0 - 1.0));
}

TEST_CASE("summation-by-parts and skew-symmetry identities") {
  std::mt19937 rng(42);
  for (int m : kSizes) {
    const SpaceGrid g = make_space_grid(-1.0, 3.0, m);
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction v = random_grid_function(g, rng);
      const GridFunction w = random_grid_function(g, rng);
      const double scale = ops::norm_l2(v) * ops::norm_l2(w) + 1.0;

      CHECK(std::abs(ops::inner(v, ops::delta_xx(w)) + ops::inner_h1(v, w)) <=
            1e-12 * scale / g.h);
      CHECK(ops::inner(v, ops::delta_xx(w)) ==
            doctest::Approx(ops::inner(ops::delta_xx(v), w)).epsilon(1e-12).scale(scale / g.h));
      CHECK(ops::inner(ops::delta_x_central(v), w) ==
            doctest::Approx(-ops::inner(v, ops::delta_x_central(w)))
                .epsilon(1e-12)
                .scale(scale / g.h));
      CHECK(std::abs(ops::inner(ops::delta_x_central(w), w)) <= 1e-12 * scale / g.h);
      CHECK(std::abs(ops::inner(ops::delta_x_central(w), ops::delta_xx(w))) <=
            1e-12 * scale / (g.h * g.h));
      CHECK(std::abs(ops::inner(ops::psi(v, w), w)) <= 1e-12 * scale * scale / g.h);
    }
  }
}

TEST_CASE("discrete product rule for the central difference") {
  std::mt19937 rng(7);
  for (int m : kSizes) {
    const SpaceGrid g = make_space_grid(0.0, 2.0, m);
    const GridFunction v = random_grid_function(g, rng);
    const GridFunction w = random_grid_function(g, rng);
    const GridFunction vw(g, v.values.cwiseProduct(w.values));
    const GridFunction lhs = ops::delta_x_central(vw);
    const GridFunction dv = ops::delta_x_half(v);  // entry p = delta_x v_{p-1/2}
    for (int p = 1; p <= m; ++p) {
      const double rhs = 0.5 * w(p + 1) * dv(p + 1) + 0.5 * w(p - 1) * dv(p) +
                         v(p) * 0.5 * (w(p + 1) - w(p - 1)) / g.h;
      CHECK(lhs.values[p - 1] == doctest::Approx(rhs).epsilon(1e-12).scale(1.0 / g.h));
    }
  }
}

TEST_CASE("embedding inequalities for zero-mean grid functions") {
  std::mt19937 rng(11);
  for (int m : kSizes) {
    const SpaceGrid g = make_space_grid(0.0, 5.0, m);
    for (int trial = 0; trial < 20; ++trial) {
      const GridFunction w = zero_mean(random_grid_function(g, rng));
      const double h1 = ops::seminorm_h1(w);
      CHECK(ops::norm_max(w) <= std::sqrt(g.length) / 2.0 * h1 * (1.0 + 1e-12));
      CHECK(h1 <= 2.0 / g.h * ops::norm_l2(w) * (1.0 + 1e-12));
      CHECK(ops::norm_l2(w) <= g.length / std::sqrt(6.0) * h1 * (1.0 + 1e-12));
      CHECK(ops::norm_l2(ops::delta_x_central(w)) <= h1 * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("psi is bilinear and matches its definition") {
  std::mt19937 rng(3);
  const SpaceGrid g = make_space_grid(0.0, 1.0, 37);
  const GridFunction v = random_grid_function(g, rng);
  const GridFunction w = random_grid_function(g, rng);
  const GridFunction vw(g, v.values.cwiseProduct(w.values));
  const GridFunction expected(
      g, (v.values.cwiseProduct(ops::delta_x_central(w).values) +
          ops::delta_x_central(vw).values) /
             3.0);
  CHECK((ops::psi(v, w).values - expected.values).cwiseAbs().maxCoeff() <= 1e-13 / g.h);

  const GridFunction v2 = random_grid_function(g, rng);
  const GridFunction lin(g, 2.0 * v.values + 0.5 * v2.values);
  const GridFunction combo = ops::psi(lin, w);
  const GridFunction parts(g, 2.0 * ops::psi(v, w).values + 0.5 * ops::psi(v2, w).values);
  CHECK((combo.values - parts.values).cwiseAbs().maxCoeff() <= 1e-12 / g.h);
}

TEST_CASE("inner products and norms against direct sums") {
  const SpaceGrid g = make_space_grid(0.0, 2.0, 10);
  const GridFunction u = sample(g, [](double x) { return std::sin(kPi * x); });
  CHECK(ops::inner(u, u) == doctest::Approx(1.0).epsilon(1e-12));  // h sum sin^2 = L/2
  CHECK(ops::norm_l2(u) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ops::norm_max(u) == doctest::Approx(std::sin(kPi * 0.4)).epsilon(1e-12));
}

TEST_CASE("grid mismatch is rejected") {
  const SpaceGrid g1 = make_space_grid(0.0, 1.0, 8);
  const SpaceGrid g2 = make_space_grid(0.0, 1.0, 16);
  CHECK_THROWS_AS(ops::inner(GridFunction::zero(g1), GridFunction::zero(g2)),
                  std::invalid_argument);
}
