#include "gqaoa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "gqaoa/errors.hpp"
#include "gqaoa/parallel.hpp"
#include "gqaoa/problems.hpp"
#include "gqaoa/rng.hpp"

namespace gqaoa {

DepthSweepTable depth_sweep(const CharacteristicFunction& cf, int p_max,
                            const OptimizationConfig& config) {
  if (p_max < 1 || p_max > kDefaultMaxDepth) {
    throw DomainError("p_max must lie in [1, " + std::to_string(kDefaultMaxDepth) + "]");
  }
  DepthSweepTable table;
  for (int p = 1; p <= p_max; ++p) {
    OptimizationConfig cfg = config;
    cfg.warm_start.reset();
    if (!table.rows.empty()) cfg.warm_start = zero_pad(table.rows.back().schedule, p);
    const OptimizationResult res = minimize_ep(cf, p, cfg);
    table.rows.push_back({p, res.best_schedule, res.best_value});
  }
  return table;
}

ProblemKind parse_problem_kind(const std::string& name) {
  if (name == "npp") return ProblemKind::npp;
  if (name == "rcm") return ProblemKind::rcm;
  throw DomainError("unknown problem kind '" + name + "' (expected npp or rcm)");
}

std::string to_string(ProblemKind kind) { return kind == ProblemKind::npp ? "npp" : "rcm"; }

std::uint64_t instance_seed(std::uint64_t seed, int n, int index) {
  return splitmix64(splitmix64(seed) ^ (static_cast<std::uint64_t>(n) << 32) ^
                    static_cast<std::uint64_t>(index));
}

ConvergenceTable convergence_study(ProblemKind kind, int p, const std::vector<int>& sizes,
                                   int instances, std::uint64_t seed,
                                   const OptimizationConfig& config) {
  if (instances < 1) throw DomainError("instances must be at least 1");
  if (p < 1) throw DomainError("depth must be at least 1");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw DomainError("problem sizes must be positive");
    if (sizes[i] > kMaxConvergenceSize) {
      throw ResourceLimitError("convergence study size " + std::to_string(sizes[i]) +
                               " exceeds " + std::to_string(kMaxConvergenceSize));
    }
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw DomainError("problem sizes must be strictly increasing");
    }
  }

  ConvergenceTable table;
  table.p = p;
  for (int n : sizes) {
    std::vector<OptimizationResult> results(instances);
    OptimizationConfig cfg = config;
    // Instances are the parallel unit; starts within one run stay serial.
    cfg.threads = 1;
    parallel_for(static_cast<std::size_t>(instances), config.threads, [&](std::size_t k) {
      const std::uint64_t s = instance_seed(seed, n, static_cast<int>(k));
      Spectrum spectrum = kind == ProblemKind::npp ? npp_spectrum(sample_npp(n, s))
                                                   : rcm_spectrum(sample_rcm(n, s));
      results[k] = minimize_ep(CharacteristicFunction::empirical(std::move(spectrum)), p, cfg);
    });

    ConvergenceRow row{n, instances, std::vector<double>(p), std::vector<double>(p),
                       std::vector<double>(p), std::vector<double>(p), 0.0};
    auto mean_se = [&](auto&& pick, double& mean, double& se) {
      double sum = 0.0;
      for (const auto& r : results) sum += pick(r);
      mean = sum / instances;
      if (instances < 2) {
        se = 0.0;
        return;
      }
      double ss = 0.0;
      for (const auto& r : results) ss += (pick(r) - mean) * (pick(r) - mean);
      se = std::sqrt(ss / (instances - 1) / instances);
    };
    for (int j = 0; j < p; ++j) {
      mean_se([j](const OptimizationResult& r) { return r.best_schedule.gammas[j]; },
              row.mean_gammas[j], row.se_gammas[j]);
      mean_se([j](const OptimizationResult& r) { return r.best_schedule.betas[j]; },
              row.mean_betas[j], row.se_betas[j]);
    }
    double value_sum = 0.0;
    for (const auto& r : results) value_sum += r.best_value;
    row.mean_value = value_sum / instances;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<double> GridAxis::points() const {
  if (steps < 2) throw DomainError("grid axes need at least 2 points");
  if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
    throw DomainError("grid axis bounds must be finite with max > min");
  }
  std::vector<double> out(steps);
  const double h = (max - min) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[i] = min + h * i;
  out.back() = max;
  return out;
}

LandscapeGrid landscape_scan(const LandscapeSource& source, const GridAxis& gamma_axis,
                             const GridAxis& beta_axis, int threads) {
  LandscapeGrid grid;
  grid.gammas = gamma_axis.points();
  grid.betas = beta_axis.points();

  const CharacteristicFunction cf =
      std::holds_alternative<Spectrum>(source)
          ? CharacteristicFunction::empirical(std::get<Spectrum>(source))
          : std::get<CharacteristicFunction>(source);
  const auto [shifted, mu] = zero_mean(cf);

  grid.values.assign(grid.gammas.size(), std::vector<double>(grid.betas.size()));
  parallel_for(grid.gammas.size(), threads, [&](std::size_t i) {
    // Gamma depends only on the row, so the cf is sampled once per gamma.
    const CfValue v = shifted(grid.gammas[i]);
    for (std::size_t j = 0; j < grid.betas.size(); ++j) {
      const complex b = b_factor(grid.betas[j]);
      grid.values[i][j] = mu + 2.0 * (std::conj(b) * std::conj(v.gamma) * v.gamma_prime).imag();
    }
  });
  return grid;
}

double sup_distance(const LandscapeGrid& a, const LandscapeGrid& b) {
  if (a.gammas != b.gammas || a.betas != b.betas) {
    throw DomainError("landscapes are on different grids");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    for (std::size_t j = 0; j < a.values[i].size(); ++j) {
      worst = std::max(worst, std::abs(a.values[i][j] - b.values[i][j]));
    }
  }
  return worst;
}

}  // namespace gqaoa
