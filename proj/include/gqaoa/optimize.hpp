#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gqaoa/charfn.hpp"
#include "gqaoa/ensemble.hpp"

namespace gqaoa {

struct Interval {
  double lo;
  double hi;
};

struct OptimizationConfig {
  int starts = 64;
  std::uint64_t seed = 0;
  Interval gamma_range{-2.0, 2.0};
  Interval beta_range{0.0, 6.283185307179586};
  double fd_step = 1e-6;
  double gradient_tolerance = 1e-8;
  int max_iterations = 500;
  // Optional warm start (e.g. a zero-padded lower-depth optimum). It is tried
  // as-is plus warm_perturbations jittered copies, on top of the random starts.
  std::optional<AngleSchedule> warm_start;
  int warm_perturbations = 8;
  double warm_jitter = 0.1;
  // Worker threads for independent starts; 0 = auto. Never changes results.
  int threads = 1;

  void validate() const;
};

using Objective = std::function<double(std::span<const double>)>;

// Central differences; throws NumericalError naming the coordinate whose probe
// produced a non-finite value.
std::vector<double> fd_gradient(const Objective& objective, std::span<const double> point,
                                double step);

struct DescentResult {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// BFGS with finite-difference gradients and Armijo backtracking. Converged
// means the gradient infinity-norm dropped below config.gradient_tolerance.
DescentResult local_descent(const Objective& objective, std::span<const double> start,
                            const OptimizationConfig& config);

struct StartRecord {
  std::vector<double> start;
  std::vector<double> final_point;
  double start_value = 0.0;
  double final_value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool warm = false;
};

struct OptimizationResult {
  int p = 0;
  AngleSchedule best_schedule;
  double best_value = 0.0;
  bool converged = false;
  std::vector<StartRecord> per_start;
  OptimizationConfig config;
};

// gamma_1 >= 0 representative of the (gamma, beta) -> (-gamma, -beta) pair,
// with every beta wrapped into [0, 2 pi).
AngleSchedule canonicalize(AngleSchedule schedule);

// Appends identity layers (gamma = beta = 0) up to depth p.
AngleSchedule zero_pad(const AngleSchedule& schedule, int p);

// Multistart minimization of ep_full(cf, .) over 2p angles. Start i draws from
// Rng::stream(config.seed, i), so results do not depend on thread count.
OptimizationResult minimize_ep(const CharacteristicFunction& cf, int p,
                               const OptimizationConfig& config);

}  // namespace gqaoa
