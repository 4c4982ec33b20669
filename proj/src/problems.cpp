#include "bbmb/problems.hpp"

#include <cmath>
#include <numbers>

namespace bbmb {
namespace {
constexpr double kPi = std::numbers::pi;
}

Problem manufactured_problem(double mu, double lambda) {
  Problem prob;
  prob.name = "manufactured";
  prob.a = 0.0;
  prob.length = 2.0;
  prob.params.mu = mu;
  prob.params.lambda = lambda;
  prob.params.phi = [](double x) { return std::sin(kPi * x); };
  prob.params.exact = [](double x, double t) { return std::exp(t) * std::sin(kPi * x); };
  // f = u_t - mu u_xxt + u u_x + u_x - lambda u_xx for u = e^t sin(pi x).
  prob.params.source = [mu, lambda](double x, double t) {
    const double et = std::exp(t);
    return (1.0 + (mu + lambda) * kPi * kPi) * et * std::sin(kPi * x) +
           0.5 * kPi * et * et * std::sin(2.0 * kPi * x) + kPi * et * std::cos(kPi * x);
  };
  return prob;
}

Problem soliton_problem(double mu, double lambda) {
  Problem prob;
  prob.name = "soliton";
  prob.a = -30.0;
  prob.length = 60.0;
  prob.params.mu = mu;
  prob.params.lambda = lambda;
  prob.params.phi = [](double x) {
    const double s = 1.0 / std::cosh(x / 3.0);
    return (std::sqrt(6.0) / 3.0) * s * s;
  };
  return prob;
}

Problem custom_problem(double mu, double lambda, double a, double length, double amplitude) {
  Problem prob;
  prob.name = "custom";
  prob.a = a;
  prob.length = length;
  prob.params.mu = mu;
  prob.params.lambda = lambda;
  prob.params.phi = [length, amplitude](double x) {
    return amplitude * std::sin(2.0 * kPi * x / length);
  };
  return prob;
}

}  // namespace bbmb
