#include "gqaoa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gqaoa/errors.hpp"
#include "gqaoa/rng.hpp"

namespace gqaoa {

namespace {

void require_dimensions(const StateVector& state, const Spectrum& spectrum) {
  if (state.size() != spectrum.size()) {
    throw DomainError("state has " + std::to_string(state.size()) +
                      " amplitudes but spectrum has " + std::to_string(spectrum.size()) +
                      " values");
  }
}

}  // namespace

StateVector::StateVector(int n, std::vector<complex> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::init_plus(int n) {
  if (n < 1) throw DomainError("qubit count must be at least 1");
  if (n > kMaxQubits) {
    throw ResourceLimitError("qubit count " + std::to_string(n) + " exceeds the " +
                             std::to_string(kMaxQubits) + "-qubit limit");
  }
  const std::size_t size = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(size));
  return StateVector(n, std::vector<complex>(size, complex{amp, 0.0}));
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

void StateVector::apply_phase(const Spectrum& spectrum, double gamma) {
  require_dimensions(*this, spectrum);
  for (std::size_t z = 0; z < amplitudes_.size(); ++z) {
    amplitudes_[z] *= std::polar(1.0, gamma * spectrum[z]);
  }
}

void StateVector::apply_grover_driver(double beta) {
  complex total{0.0, 0.0};
  for (const complex& a : amplitudes_) total += a;
  // B * <+|psi> / sqrt(N) = B * total / N.
  const complex shift = b_factor(beta) * total / static_cast<double>(amplitudes_.size());
  for (complex& a : amplitudes_) a += shift;
}

StateVector init_plus(int n) { return StateVector::init_plus(n); }

StateVector apply_phase(StateVector state, const Spectrum& spectrum, double gamma) {
  state.apply_phase(spectrum, gamma);
  return state;
}

StateVector apply_grover_driver(StateVector state, double beta) {
  state.apply_grover_driver(beta);
  return state;
}

StateVector prepare_qaoa(const Spectrum& spectrum, const AngleSchedule& schedule) {
  schedule.validate();
  StateVector state = StateVector::init_plus(spectrum.n());
  for (int i = 0; i < schedule.depth(); ++i) {
    state.apply_phase(spectrum, schedule.gammas[i]);
    state.apply_grover_driver(schedule.betas[i]);
  }
  return state;
}

double expectation(const StateVector& state, const Spectrum& spectrum) {
  require_dimensions(state, spectrum);
  double sum = 0.0;
  const auto& amps = state.amplitudes();
  for (std::size_t z = 0; z < amps.size(); ++z) sum += spectrum[z] * std::norm(amps[z]);
  return sum;
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector& state, std::uint64_t seed,
                                             std::int64_t shots) {
  if (shots < 1) throw DomainError("shots must be at least 1");
  const auto& amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double running = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z) {
    running += std::norm(amps[z]);
    cdf[z] = running;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> samples;
  samples.reserve(static_cast<std::size_t>(shots));
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) it = std::prev(cdf.end());
    samples.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
  }
  return samples;
}

}  // namespace gqaoa
