#include "gqaoa/problems.hpp"

#include <cmath>
#include <string>

#include "gqaoa/errors.hpp"
#include "gqaoa/rng.hpp"

namespace gqaoa {

namespace {

void require_size(int n) {
  if (n < 1) throw DomainError("problem size n must be at least 1");
}

void require_spectrum_size(int n, std::size_t len) {
  require_size(n);
  if (n > kMaxQubits) {
    throw ResourceLimitError("spectrum for n = " + std::to_string(n) + " exceeds the " +
                             std::to_string(kMaxQubits) + "-qubit limit");
  }
  if (len != static_cast<std::size_t>(n)) {
    throw DomainError("instance has " + std::to_string(len) + " entries, expected n = " +
                      std::to_string(n));
  }
}

// values[z] = sum_i (-1)^{z_i} w_i
std::vector<double> signed_sums(const std::vector<double>& w) {
  const int n = static_cast<int>(w.size());
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> values(size);
  for (std::size_t z = 0; z < size; ++z) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += (z >> i & 1U) ? -w[i] : w[i];
    values[z] = sum;
  }
  return values;
}

}  // namespace

double npp_x_max(int n) {
  require_size(n);
  return std::sqrt(3.0 / n);
}

RcmInstance sample_rcm(int n, std::uint64_t seed) {
  require_size(n);
  Rng rng(seed);
  const double sigma = 1.0 / std::sqrt(static_cast<double>(n));
  RcmInstance inst{n, seed, std::vector<double>(n)};
  for (double& g : inst.weights) g = rng.normal(0.0, sigma);
  return inst;
}

NppInstance sample_npp(int n, std::uint64_t seed) {
  require_size(n);
  Rng rng(seed);
  const double x_max = npp_x_max(n);
  NppInstance inst{n, seed, std::vector<double>(n)};
  for (double& x : inst.numbers) x = rng.uniform(0.0, x_max);
  return inst;
}

Spectrum rcm_spectrum(const RcmInstance& instance) {
  require_spectrum_size(instance.n, instance.weights.size());
  for (double g : instance.weights) {
    if (!std::isfinite(g)) throw DomainError("RCM weight is not finite");
  }
  return Spectrum(signed_sums(instance.weights));
}

Spectrum npp_spectrum(const NppInstance& instance) {
  require_spectrum_size(instance.n, instance.numbers.size());
  const double x_max = npp_x_max(instance.n);
  for (double x : instance.numbers) {
    if (!(x >= 0.0 && x <= x_max)) {
      throw DomainError("NPP number outside [0, " + std::to_string(x_max) + "]");
    }
  }
  auto values = signed_sums(instance.numbers);
  for (double& v : values) v *= v;
  return Spectrum(std::move(values));
}

}  // namespace gqaoa
