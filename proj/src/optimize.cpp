#include "gqaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gqaoa/errors.hpp"
#include "gqaoa/parallel.hpp"
#include "gqaoa/rng.hpp"

namespace gqaoa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool lexicographic_less(const AngleSchedule& a, const AngleSchedule& b) {
  const auto fa = a.flatten();
  const auto fb = b.flatten();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

}  // namespace

void OptimizationConfig::validate() const {
  if (starts < 1) throw DomainError("starts must be at least 1");
  if (!(fd_step > 0.0)) throw DomainError("fd_step must be positive");
  if (!(gradient_tolerance > 0.0)) throw DomainError("gradient_tolerance must be positive");
  if (max_iterations < 0) throw DomainError("max_iterations must be non-negative");
  if (!(gamma_range.hi > gamma_range.lo)) throw DomainError("gamma_range is degenerate");
  if (!(beta_range.hi > beta_range.lo)) throw DomainError("beta_range is degenerate");
  if (warm_perturbations < 0) throw DomainError("warm_perturbations must be non-negative");
  if (warm_start) warm_start->validate();
}

std::vector<double> fd_gradient(const Objective& objective, std::span<const double> point,
                                double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  std::vector<double> probe(point.begin(), point.end());
  std::vector<double> grad(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    probe[i] = point[i] + step;
    const double up = objective(probe);
    probe[i] = point[i] - step;
    const double down = objective(probe);
    probe[i] = point[i];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw NumericalError("objective is not finite near coordinate " + std::to_string(i),
                           static_cast<int>(i));
    }
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

DescentResult local_descent(const Objective& objective, std::span<const double> start,
                            const OptimizationConfig& config) {
  const std::size_t d = start.size();
  DescentResult out;
  out.point.assign(start.begin(), start.end());
  out.value = objective(out.point);
  if (!std::isfinite(out.value)) {
    throw NumericalError("objective is not finite at the start point", -1);
  }
  std::vector<double> grad = fd_gradient(objective, out.point, config.fd_step);

  // Inverse Hessian approximation, row-major.
  std::vector<double> h(d * d, 0.0);
  auto reset_hessian = [&](double scale) {
    std::fill(h.begin(), h.end(), 0.0);
    for (std::size_t i = 0; i < d; ++i) h[i * d + i] = scale;
  };
  reset_hessian(1.0);
  bool scaled = false;

  std::vector<double> dir(d), trial(d), s(d), y(d), hy(d);
  for (out.iterations = 0; out.iterations < config.max_iterations; ++out.iterations) {
    if (inf_norm(grad) < config.gradient_tolerance) break;

    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < d; ++j) acc -= h[i * d + j] * grad[j];
      dir[i] = acc;
    }
    double slope = dot(grad, dir);
    if (!(slope < 0.0)) {
      reset_hessian(1.0);
      for (std::size_t i = 0; i < d; ++i) dir[i] = -grad[i];
      slope = dot(grad, dir);
    }

    // Armijo backtracking.
    double alpha = 1.0;
    double trial_value = 0.0;
    bool accepted = false;
    for (int k = 0; k < 60; ++k) {
      for (std::size_t i = 0; i < d; ++i) trial[i] = out.point[i] + alpha * dir[i];
      trial_value = objective(trial);
      if (std::isfinite(trial_value) && trial_value <= out.value + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> next_grad = fd_gradient(objective, trial, config.fd_step);
    for (std::size_t i = 0; i < d; ++i) {
      s[i] = trial[i] - out.point[i];
      y[i] = next_grad[i] - grad[i];
    }
    out.point = trial;
    out.value = trial_value;
    grad = std::move(next_grad);

    const double sy = dot(s, y);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      if (!scaled) {
        reset_hessian(sy / dot(y, y));
        scaled = true;
      }
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const double rho = 1.0 / sy;
      for (std::size_t i = 0; i < d; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) acc += h[i * d + j] * y[j];
        hy[i] = acc;
      }
      const double yhy = dot(y, hy);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          h[i * d + j] += rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
        }
      }
    }
  }
  out.converged = inf_norm(grad) < config.gradient_tolerance;
  return out;
}

AngleSchedule canonicalize(AngleSchedule schedule) {
  schedule.validate();
  if (schedule.gammas.front() < 0.0) {
    for (double& g : schedule.gammas) g = -g;
    for (double& b : schedule.betas) b = -b;
  }
  for (double& b : schedule.betas) {
    b = std::fmod(b, kTwoPi);
    if (b < 0.0) b += kTwoPi;
    if (b >= kTwoPi) b = 0.0;
  }
  return schedule;
}

AngleSchedule zero_pad(const AngleSchedule& schedule, int p) {
  schedule.validate();
  if (p < schedule.depth()) throw DomainError("cannot zero-pad to a smaller depth");
  AngleSchedule out = schedule;
  out.gammas.resize(p, 0.0);
  out.betas.resize(p, 0.0);
  return out;
}

OptimizationResult minimize_ep(const CharacteristicFunction& cf, int p,
                               const OptimizationConfig& config) {
  config.validate();
  if (p < 1) throw DomainError("depth must be at least 1");
  if (config.warm_start && config.warm_start->depth() != p) {
    throw DomainError("warm start depth does not match p");
  }
  const auto [shifted, mu] = zero_mean(cf);
  const EpOptions ep_options{std::max(kDefaultMaxDepth, p)};
  const Objective objective = [&shifted, mu, &ep_options](std::span<const double> x) {
    const auto half = static_cast<std::ptrdiff_t>(x.size() / 2);
    const AngleSchedule schedule(std::vector<double>(x.begin(), x.begin() + half),
                                 std::vector<double>(x.begin() + half, x.end()));
    return mu + detail::ep_sum(shifted, schedule, ep_options, nullptr);
  };

  // Random starts first so a k-start run is a prefix of any larger run.
  std::vector<std::vector<double>> starts;
  std::vector<bool> warm_flags;
  for (int i = 0; i < config.starts; ++i) {
    Rng rng = Rng::stream(config.seed, static_cast<std::uint64_t>(i));
    std::vector<double> x(2 * p);
    for (int j = 0; j < p; ++j) x[j] = rng.uniform(config.gamma_range.lo, config.gamma_range.hi);
    for (int j = 0; j < p; ++j) x[p + j] = rng.uniform(config.beta_range.lo, config.beta_range.hi);
    starts.push_back(std::move(x));
    warm_flags.push_back(false);
  }
  if (config.warm_start) {
    const auto base = config.warm_start->flatten();
    starts.push_back(base);
    warm_flags.push_back(true);
    for (int k = 0; k < config.warm_perturbations; ++k) {
      Rng rng = Rng::stream(config.seed, static_cast<std::uint64_t>(config.starts + 1 + k));
      auto x = base;
      for (double& v : x) v += rng.uniform(-config.warm_jitter, config.warm_jitter);
      starts.push_back(std::move(x));
      warm_flags.push_back(true);
    }
  }

  OptimizationResult result;
  result.p = p;
  result.config = config;
  result.per_start.resize(starts.size());
  parallel_for(starts.size(), config.threads, [&](std::size_t i) {
    StartRecord& rec = result.per_start[i];
    rec.start = starts[i];
    rec.warm = warm_flags[i];
    rec.start_value = objective(starts[i]);
    DescentResult run = local_descent(objective, starts[i], config);
    rec.final_point = std::move(run.point);
    rec.final_value = run.value;
    rec.iterations = run.iterations;
    rec.converged = run.converged;
  });

  result.converged = std::any_of(result.per_start.begin(), result.per_start.end(),
                                 [](const StartRecord& r) { return r.converged; });
  const StartRecord* best = nullptr;
  AngleSchedule best_canonical;
  for (const StartRecord& rec : result.per_start) {
    if (result.converged && !rec.converged) continue;
    AngleSchedule canonical = canonicalize(AngleSchedule::unflatten(rec.final_point));
    // Strictly by value; exact ties fall back to the canonical schedule order.
    const bool better = best == nullptr || rec.final_value < best->final_value ||
                        (rec.final_value == best->final_value &&
                         lexicographic_less(canonical, best_canonical));
    if (better) {
      best = &rec;
      best_canonical = std::move(canonical);
    }
  }
  result.best_schedule = std::move(best_canonical);
  result.best_value = best->final_value;
  return result;
}

}  // namespace gqaoa
