#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gqaoa/charfn.hpp"
#include "gqaoa/ensemble.hpp"
#include "gqaoa/optimize.hpp"

namespace gqaoa {

struct DepthSweepRow {
  int p;
  AngleSchedule schedule;
  double value;
};

struct DepthSweepTable {
  std::vector<DepthSweepRow> rows;
};

// Optimizes depths 1..p_max, warm-starting depth p from the zero-padded
// depth p-1 optimum in addition to config's random starts.
DepthSweepTable depth_sweep(const CharacteristicFunction& cf, int p_max,
                            const OptimizationConfig& config);

enum class ProblemKind { npp, rcm };

ProblemKind parse_problem_kind(const std::string& name);
std::string to_string(ProblemKind kind);

struct ConvergenceRow {
  int n;
  int instances;
  std::vector<double> mean_gammas;
  std::vector<double> se_gammas;
  std::vector<double> mean_betas;
  std::vector<double> se_betas;
  double mean_value;
};

struct ConvergenceTable {
  int p = 0;
  std::vector<ConvergenceRow> rows;
};

inline constexpr int kMaxConvergenceSize = 20;

// For each size, optimizes `instances` seeded instances through their
// empirical characteristic function and averages canonical angles. Instance k
// at size n uses seed splitmix64(seed) ^ (n, k) mixing; optimizer starts use
// config.seed as given. Throws ResourceLimitError for n > 20.
ConvergenceTable convergence_study(ProblemKind kind, int p, const std::vector<int>& sizes,
                                   int instances, std::uint64_t seed,
                                   const OptimizationConfig& config);

// Seed used for instance `index` of size n inside convergence_study.
std::uint64_t instance_seed(std::uint64_t seed, int n, int index);

struct LandscapeGrid {
  std::vector<double> gammas;
  std::vector<double> betas;
  // values[i][j] = E(gammas[i], betas[j]) at depth 1.
  std::vector<std::vector<double>> values;
};

struct GridAxis {
  double min;
  double max;
  int steps;
  std::vector<double> points() const;
};

inline constexpr GridAxis kDefaultGammaAxis{0.0, 1.5, 61};
inline constexpr GridAxis kDefaultBetaAxis{0.0, 6.283185307179586, 61};

using LandscapeSource = std::variant<CharacteristicFunction, Spectrum>;

LandscapeGrid landscape_scan(const LandscapeSource& source, const GridAxis& gamma_axis,
                             const GridAxis& beta_axis, int threads = 1);

// Max absolute entry-wise difference; grids must share axes.
double sup_distance(const LandscapeGrid& a, const LandscapeGrid& b);

}  // namespace gqaoa
