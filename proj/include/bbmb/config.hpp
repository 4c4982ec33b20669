#pragma once

#include <stdexcept>
#include <string>

#include "bbmb/schemes.hpp"

namespace bbmb {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SchemeKind { ncd, ttcd, both };
enum class SweepAxis { none, time, space };

/// Flat key = value experiment description with [section] headers.
/// Sections/keys:
///   [problem]  name (manufactured|soliton|custom), a, L, mu, lambda, amplitude
///   [grid]     T, M, N_c, beta_tau
///   [scheme]   type (ncd|ttcd|both), tol, max_iter
///   [sweep]    axis (none|time|space), levels
///   [output]   path, threads
/// Unknown sections or keys are errors.
struct ExperimentConfig {
  std::string problem = "soliton";
  double a = 0.0;        // custom-problem domain (builtins carry their own)
  double length = 1.0;
  double amplitude = 1.0;
  double mu = 1.0;
  double lambda = 1.0;

  double horizon = 1.0;  // T
  int node_count = 20;   // M
  int coarse_steps = 10; // N_c
  int beta_tau = 2;

  SchemeKind scheme = SchemeKind::both;
  IterationPolicy policy;  // tol 1e-12, max_iter 200

  SweepAxis axis = SweepAxis::none;
  int levels = 4;  // ladder rungs, exact 2:1 progression

  std::string output_path = ".";
  int threads = 1;
};

/// Parses and validates a config document; throws ConfigError with a
/// line/field message on unknown keys or constraint violations.
ExperimentConfig parse_config(const std::string& text);

/// Convenience: reads the file and parses it.
ExperimentConfig parse_config_file(const std::string& path);

std::string to_string(SchemeKind kind);
std::string to_string(SweepAxis axis);

}  // namespace bbmb
