#pragma once

#include <string>

#include "bbmb/schemes.hpp"

namespace bbmb {

/// A named problem: PDE data plus its natural domain.
struct Problem {
  std::string name;
  double a = 0.0;
  double length = 0.0;  // period L
  PdeParams params;
};

/// u = e^t sin(pi x) on [0,2] with the compensating source; exact solution known.
Problem manufactured_problem(double mu, double lambda);

/// Single-hump initial profile (sqrt(6)/3) sech^2(x/3) on [-30,30]; no exact solution.
Problem soliton_problem(double mu, double lambda);

/// amplitude * sin(2 pi x / L) initial data on a caller-chosen domain; no exact solution.
Problem custom_problem(double mu, double lambda, double a, double length, double amplitude);

}  // namespace bbmb
