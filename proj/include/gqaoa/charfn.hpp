#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace gqaoa {

using complex = std::complex<double>;

// Largest qubit count for which dense spectra and state vectors are built.
inline constexpr int kMaxQubits = 26;

// Objective values C(z) of one finite instance, indexed by z = 0 .. 2^n - 1.
class Spectrum {
 public:
  // Throws DomainError unless values.size() is 2^n with 1 <= n <= kMaxQubits
  // and every value is finite.
  explicit Spectrum(std::vector<double> values);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t z) const { return values_[z]; }
  double mean() const;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// Characteristic function value and first derivative at one point.
struct CfValue {
  complex gamma;
  complex gamma_prime;
};

// A problem ensemble represented only through Gamma(t) = E[exp(i t C)].
//
// Every variant describes a real-valued distribution, so
// Gamma(-t) = conj(Gamma(t)) and Gamma'(-t) = -conj(Gamma'(t)) hold exactly;
// the ensemble evaluator relies on this. Instances are immutable and cheap to
// copy (shared ownership of spectrum / inner function).
class CharacteristicFunction {
 public:
  enum class Kind { gaussian, chi_square_1, empirical, mean_shifted };

  // Standard normal, Gamma(t) = exp(-t^2/2).
  static CharacteristicFunction gaussian();
  // Chi-square with one degree of freedom, Gamma(t) = (1 - 2it)^(-1/2).
  static CharacteristicFunction chi_square_1();
  // Finite sum (1/N) sum_z exp(i t C(z)) over a concrete spectrum.
  static CharacteristicFunction empirical(std::shared_ptr<const Spectrum> spectrum);
  static CharacteristicFunction empirical(Spectrum spectrum);
  // Distribution of C - shift: exp(-i t shift) * Gamma_inner(t).
  static CharacteristicFunction mean_shifted(const CharacteristicFunction& inner, double shift);

  Kind kind() const noexcept { return kind_; }
  double shift() const noexcept { return shift_; }
  // Non-null only for empirical.
  const Spectrum* spectrum() const noexcept { return spectrum_.get(); }
  // Non-null only for mean_shifted.
  const CharacteristicFunction* inner() const noexcept { return inner_.get(); }

  // (Gamma(t), Gamma'(t)). Throws DomainError for non-finite t.
  CfValue operator()(double t) const;

 private:
  CharacteristicFunction() = default;

  Kind kind_ = Kind::gaussian;
  double shift_ = 0.0;
  std::shared_ptr<const Spectrum> spectrum_;
  std::shared_ptr<const CharacteristicFunction> inner_;
};

CfValue cf_eval(const CharacteristicFunction& cf, double t);

// Re(-i Gamma'(0)). Throws ConsistencyError when the imaginary residual exceeds
// 1e-10 * (1 + |mean|).
double cf_mean(const CharacteristicFunction& cf);

struct ZeroMeanResult {
  CharacteristicFunction shifted;
  double mu;
};

// Wraps cf so its mean is zero; expectations satisfy E(cf) = mu + E(shifted).
ZeroMeanResult zero_mean(const CharacteristicFunction& cf);

}  // namespace gqaoa
