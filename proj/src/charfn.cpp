#include "gqaoa/charfn.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gqaoa/errors.hpp"

namespace gqaoa {

namespace {

constexpr complex kI{0.0, 1.0};

CfValue eval_empirical(const Spectrum& spectrum, double t) {
  // Plain index-order accumulation; exact normalization at t = 0 because N is
  // a power of two.
  double re = 0.0, im = 0.0, dre = 0.0, dim = 0.0;
  for (double c : spectrum.values()) {
    const double phase = t * c;
    const double cs = std::cos(phase);
    const double sn = std::sin(phase);
    re += cs;
    im += sn;
    dre += c * cs;
    dim += c * sn;
  }
  const double inv_n = 1.0 / static_cast<double>(spectrum.size());
  // d/dt exp(itc) = i c exp(itc)  =>  Gamma' = i * (dre + i dim) / N.
  return {complex{re * inv_n, im * inv_n}, complex{-dim * inv_n, dre * inv_n}};
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  const std::size_t size = values_.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw DomainError("spectrum length " + std::to_string(size) +
                      " is not 2^n with n >= 1");
  }
  n_ = std::countr_zero(size);
  if (n_ > kMaxQubits) {
    throw ResourceLimitError("spectrum with n = " + std::to_string(n_) +
                             " exceeds the " + std::to_string(kMaxQubits) + "-qubit limit");
  }
  for (std::size_t z = 0; z < size; ++z) {
    if (!std::isfinite(values_[z])) {
      throw DomainError("spectrum value at index " + std::to_string(z) + " is not finite");
    }
  }
}

double Spectrum::mean() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

CharacteristicFunction CharacteristicFunction::gaussian() {
  CharacteristicFunction cf;
  cf.kind_ = Kind::gaussian;
  return cf;
}

CharacteristicFunction CharacteristicFunction::chi_square_1() {
  CharacteristicFunction cf;
  cf.kind_ = Kind::chi_square_1;
  return cf;
}

CharacteristicFunction CharacteristicFunction::empirical(std::shared_ptr<const Spectrum> spectrum) {
  if (!spectrum) throw DomainError("empirical characteristic function needs a spectrum");
  CharacteristicFunction cf;
  cf.kind_ = Kind::empirical;
  cf.spectrum_ = std::move(spectrum);
  return cf;
}

CharacteristicFunction CharacteristicFunction::empirical(Spectrum spectrum) {
  return empirical(std::make_shared<const Spectrum>(std::move(spectrum)));
}

CharacteristicFunction CharacteristicFunction::mean_shifted(const CharacteristicFunction& inner,
                                                            double shift) {
  if (!std::isfinite(shift)) throw DomainError("mean shift must be finite");
  CharacteristicFunction cf;
  cf.kind_ = Kind::mean_shifted;
  cf.shift_ = shift;
  cf.inner_ = std::make_shared<const CharacteristicFunction>(inner);
  return cf;
}

CfValue CharacteristicFunction::operator()(double t) const {
  if (!std::isfinite(t)) throw DomainError("characteristic function argument must be finite");
  switch (kind_) {
    case Kind::gaussian: {
      const double g = std::exp(-0.5 * t * t);
      return {complex{g, 0.0}, complex{-t * g, 0.0}};
    }
    case Kind::chi_square_1: {
      // 1 - 2it has positive real part, so the principal branch is continuous.
      const complex base{1.0, -2.0 * t};
      const complex root = std::sqrt(base);
      const complex g = 1.0 / root;
      return {g, kI * g / base};
    }
    case Kind::empirical:
      return eval_empirical(*spectrum_, t);
    case Kind::mean_shifted: {
      const CfValue in = (*inner_)(t);
      const complex phase = std::polar(1.0, -t * shift_);
      return {phase * in.gamma, phase * (in.gamma_prime - kI * shift_ * in.gamma)};
    }
  }
  return {};
}

CfValue cf_eval(const CharacteristicFunction& cf, double t) { return cf(t); }

double cf_mean(const CharacteristicFunction& cf) {
  const complex m = -kI * cf(0.0).gamma_prime;
  if (std::abs(m.imag()) >= 1e-10 * (1.0 + std::abs(m.real()))) {
    throw ConsistencyError("characteristic function mean has imaginary residual " +
                           std::to_string(m.imag()));
  }
  return m.real();
}

ZeroMeanResult zero_mean(const CharacteristicFunction& cf) {
  const double mu = cf_mean(cf);
  return {CharacteristicFunction::mean_shifted(cf, mu), mu};
}

}  // namespace gqaoa
