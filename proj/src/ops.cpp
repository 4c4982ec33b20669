#include "bbmb/ops.hpp"

#include <cmath>

namespace bbmb::ops {

void require_same_grid(const GridFunction& v, const GridFunction& w) {
  if (!(v.grid == w.grid))
    throw std::invalid_argument("grid mismatch between operands");
}

GridFunction delta_x_half(const GridFunction& w) {
  const int m = w.size();
  const double inv_h = 1.0 / w.grid.h;
  Vector out(m);
  out[0] = (w.values[0] - w.values[m - 1]) * inv_h;
  for (int i = 1; i < m; ++i) out[i] = (w.values[i] - w.values[i - 1]) * inv_h;
  return {w.grid, std::move(out)};
}

GridFunction delta_xx(const GridFunction& w) {
  const int m = w.size();
  const double inv_h2 = 1.0 / (w.grid.h * w.grid.h);
  Vector out(m);
  for (int i = 0; i < m; ++i) {
    const double wl = w.values[i == 0 ? m - 1 : i - 1];
    const double wr = w.values[i == m - 1 ? 0 : i + 1];
    out[i] = (wr - 2.0 * w.values[i] + wl) * inv_h2;
  }
  return {w.grid, std::move(out)};
}

GridFunction delta_x_central(const GridFunction& w) {
  const int m = w.size();
  const double inv_2h = 0.5 / w.grid.h;
  Vector out(m);
  for (int i = 0; i < m; ++i) {
    const double wl = w.values[i == 0 ? m - 1 : i - 1];
    const double wr = w.values[i == m - 1 ? 0 : i + 1];
    out[i] = (wr - wl) * inv_2h;
  }
  return {w.grid, std::move(out)};
}

GridFunction psi(const GridFunction& v, const GridFunction& w) {
  require_same_grid(v, w);
  const int m = w.size();
  const double inv_2h = 0.5 / w.grid.h;
  Vector out(m);
  for (int i = 0; i < m; ++i) {
    const int l = i == 0 ? m - 1 : i - 1;
    const int r = i == m - 1 ? 0 : i + 1;
    const double dw = (w.values[r] - w.values[l]) * inv_2h;
    const double dvw = (v.values[r] * w.values[r] - v.values[l] * w.values[l]) * inv_2h;
    out[i] = (v.values[i] * dw + dvw) / 3.0;
  }
  return {w.grid, std::move(out)};
}

double inner(const GridFunction& v, const GridFunction& w) {
  require_same_grid(v, w);
  return w.grid.h * v.values.dot(w.values);
}

double inner_h1(const GridFunction& v, const GridFunction& w) {
  require_same_grid(v, w);
  const GridFunction dv = delta_x_half(v);
  const GridFunction dw = delta_x_half(w);
  return w.grid.h * dv.values.dot(dw.values);
}

double norm_l2(const GridFunction& w) { return std::sqrt(inner(w, w)); }

double seminorm_h1(const GridFunction& w) { return std::sqrt(inner_h1(w, w)); }

double norm_max(const GridFunction& w) { return w.values.cwiseAbs().maxCoeff(); }

}  // namespace bbmb::ops
