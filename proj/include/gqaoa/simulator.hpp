#pragma once

#include <cstdint>
#include <vector>

#include "gqaoa/charfn.hpp"
#include "gqaoa/ensemble.hpp"

namespace gqaoa {

// Dense Grover-QAOA state over n qubits. No renormalization is ever applied,
// so norm drift exposes unitarity errors instead of hiding them.
class StateVector {
 public:
  // |+>^n. Throws DomainError for n < 1, ResourceLimitError for n > kMaxQubits.
  static StateVector init_plus(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  const std::vector<complex>& amplitudes() const noexcept { return amplitudes_; }
  std::vector<complex>& amplitudes() noexcept { return amplitudes_; }
  double norm_squared() const;

  // amplitude[z] *= exp(i gamma C(z)).
  void apply_phase(const Spectrum& spectrum, double gamma);
  // (I + B(beta) |+><+|). The overlap <+|psi> is reduced in index order.
  void apply_grover_driver(double beta);

 private:
  StateVector(int n, std::vector<complex> amplitudes);

  int n_;
  std::vector<complex> amplitudes_;
};

// Value-returning forms of the in-place operations above.
StateVector init_plus(int n);
StateVector apply_phase(StateVector state, const Spectrum& spectrum, double gamma);
StateVector apply_grover_driver(StateVector state, double beta);

StateVector prepare_qaoa(const Spectrum& spectrum, const AngleSchedule& schedule);

// sum_z C(z) |amplitude[z]|^2.
double expectation(const StateVector& state, const Spectrum& spectrum);

// i.i.d. draws from |amplitude[z]|^2 by inverse-CDF sampling.
std::vector<std::uint64_t> sample_bitstrings(const StateVector& state, std::uint64_t seed,
                                             std::int64_t shots);

}  // namespace gqaoa
