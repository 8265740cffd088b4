#include "gqaoa/ensemble.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gqaoa/errors.hpp"

namespace gqaoa {

namespace {

constexpr double kMeanTolerance = 1e-10;

void require_zero_mean(const CharacteristicFunction& cf, const char* op) {
  const double mean = cf_mean(cf);
  if (std::abs(mean) > kMeanTolerance) {
    throw PreconditionError(std::string(op) + " requires a zero-mean characteristic function "
                            "(mean = " + std::to_string(mean) + "); apply zero_mean first");
  }
}

// Gamma and Gamma' at every contiguous layer range sum R(a, b), both signs.
class RangeCache {
 public:
  RangeCache(const CharacteristicFunction& cf, const std::vector<double>& gammas)
      : p_(static_cast<int>(gammas.size())),
        values_(static_cast<std::size_t>(p_ + 2) * (p_ + 2)) {
    for (int a = 1; a <= p_; ++a) {
      double sum = 0.0;
      for (int b = a; b <= p_; ++b) {
        sum += gammas[b - 1];
        values_[index(a, b)] = cf(sum);
        ++calls_;
      }
    }
    zero_ = cf(0.0);
    ++calls_;
  }

  // Value at +R(a, b).
  const CfValue& at(int a, int b) const { return values_[index(a, b)]; }
  // Gamma(-R(a, b)) via the real-distribution symmetry.
  complex gamma_neg(int a, int b) const { return std::conj(at(a, b).gamma); }
  complex gamma_prime_neg(int a, int b) const { return -std::conj(at(a, b).gamma_prime); }
  const CfValue& zero() const { return zero_; }

  std::uint64_t calls() const { return calls_; }
  std::uint64_t ranges() const { return static_cast<std::uint64_t>(p_) * (p_ + 1) / 2; }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * (p_ + 2) + b; }

  int p_;
  std::vector<CfValue> values_;
  CfValue zero_{};
  std::uint64_t calls_ = 0;
};

}  // namespace

AngleSchedule::AngleSchedule(std::vector<double> g, std::vector<double> b)
    : gammas(std::move(g)), betas(std::move(b)) {
  validate();
}

void AngleSchedule::validate() const {
  if (gammas.size() != betas.size()) {
    throw DomainError("schedule has " + std::to_string(gammas.size()) + " gammas but " +
                      std::to_string(betas.size()) + " betas");
  }
  if (gammas.empty()) throw DomainError("schedule depth must be at least 1");
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!std::isfinite(gammas[i]) || !std::isfinite(betas[i])) {
      throw DomainError("schedule angle in layer " + std::to_string(i + 1) + " is not finite");
    }
  }
}

AngleSchedule AngleSchedule::zeros(int p) {
  if (p < 1) throw DomainError("schedule depth must be at least 1");
  return AngleSchedule(std::vector<double>(p, 0.0), std::vector<double>(p, 0.0));
}

std::vector<double> AngleSchedule::flatten() const {
  std::vector<double> x(gammas);
  x.insert(x.end(), betas.begin(), betas.end());
  return x;
}

AngleSchedule AngleSchedule::unflatten(const std::vector<double>& x) {
  if (x.empty() || x.size() % 2 != 0) {
    throw DomainError("flattened schedule must have even, non-zero length");
  }
  const auto half = static_cast<std::ptrdiff_t>(x.size() / 2);
  return AngleSchedule(std::vector<double>(x.begin(), x.begin() + half),
                       std::vector<double>(x.begin() + half, x.end()));
}

TermPartition partitions_of(std::uint64_t mask, int p) {
  if (p < 1 || p > 63) throw DomainError("depth must be in [1, 63]");
  if (mask >= (std::uint64_t{1} << p)) {
    throw DomainError("mask " + std::to_string(mask) + " out of range for depth " +
                      std::to_string(p));
  }
  TermPartition out;
  out.boundary_set.push_back(0);
  for (int i = 1; i <= p; ++i) {
    if (mask >> (i - 1) & 1U) out.boundary_set.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < out.boundary_set.size(); ++k) {
    out.partitions.push_back({out.boundary_set[k] + 1, out.boundary_set[k + 1]});
  }
  for (int j = out.boundary_set.back() + 1; j <= p; ++j) out.central_indices.push_back(j);
  return out;
}

complex b_factor(double beta) { return std::polar(1.0, beta) - 1.0; }

double e1(const CharacteristicFunction& cf, double gamma, double beta) {
  const double mean = cf_mean(cf);
  const complex b = b_factor(beta);
  const CfValue v = cf(gamma);
  return mean * (1.0 + std::norm(b) * std::norm(v.gamma)) +
         2.0 * (std::conj(b) * std::conj(v.gamma) * v.gamma_prime).imag();
}

double e2(const CharacteristicFunction& cf, const AngleSchedule& schedule) {
  schedule.validate();
  if (schedule.depth() != 2) throw DomainError("e2 needs a depth-2 schedule");
  require_zero_mean(cf, "e2");

  const double g1 = schedule.gammas[0], g2 = schedule.gammas[1];
  const double be1 = schedule.betas[0], be2 = schedule.betas[1];
  const complex b1 = b_factor(be1), b2 = b_factor(be2);
  const CfValue v1 = cf(g1), v2 = cf(g2), v12 = cf(g1 + g2);

  return e1(cf, g1, be1) + e1(cf, g1 + g2, be2) +
         std::norm(b1) * std::norm(v1.gamma) * e1(cf, g2, be2) +
         2.0 * (std::conj(b1) * std::conj(b2) * std::conj(v1.gamma) * std::conj(v2.gamma) *
                v12.gamma_prime).imag() +
         2.0 * (b1 * std::conj(b2) * v1.gamma * v2.gamma_prime * std::conj(v12.gamma)).imag();
}

namespace detail {

double ep_sum(const CharacteristicFunction& cf, const AngleSchedule& schedule,
              const EpOptions& options, EpStats* stats) {
  schedule.validate();
  const int p = schedule.depth();
  if (p > options.max_depth) {
    throw ResourceLimitError("depth " + std::to_string(p) + " exceeds max_depth " +
                             std::to_string(options.max_depth));
  }
  if (p > 30) throw ResourceLimitError("depth beyond 30 cannot be enumerated");

  const RangeCache cache(cf, schedule.gammas);
  std::vector<complex> b(p + 1);
  for (int j = 1; j <= p; ++j) b[j] = b_factor(schedule.betas[j - 1]);

  // Per-mask factors. The ket side carries B_j and Gamma(+R) over its
  // partitions; the bra side carries conj(B_j) and Gamma(-R).
  const std::uint64_t masks = std::uint64_t{1} << p;
  std::vector<complex> ket(masks), bra(masks);
  std::vector<int> top(masks);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    complex k{1.0, 0.0}, br{1.0, 0.0};
    int prev = 0;
    for (int j = 1; j <= p; ++j) {
      if (!(mask >> (j - 1) & 1U)) continue;
      k *= b[j] * cache.at(prev + 1, j).gamma;
      br *= std::conj(b[j]) * cache.gamma_neg(prev + 1, j);
      prev = j;
    }
    ket[mask] = k;
    bra[mask] = br;
    top[mask] = prev;
  }

  // The central partition leaves +R(top_ket + 1, p) - R(top_bra + 1, p) as the
  // argument of Gamma'; consecutive suffix sums cancel to a single range.
  auto central = [&](int top_bra, int top_ket) -> complex {
    if (top_ket < top_bra) return cache.at(top_ket + 1, top_bra).gamma_prime;
    if (top_ket > top_bra) return cache.gamma_prime_neg(top_bra + 1, top_ket);
    return cache.zero().gamma_prime;
  };

  complex sum{0.0, 0.0};
  std::uint64_t terms = 0;
  for (std::uint64_t kk = 1; kk < masks; ++kk) {
    complex inner{0.0, 0.0};
    for (std::uint64_t kb = 0; kb < kk; ++kb) {
      inner += bra[kb] * central(top[kb], top[kk]);
    }
    sum += inner * ket[kk];
    terms += kk;
  }

  if (stats != nullptr) {
    stats->off_diagonal_terms = terms;
    stats->cf_calls = cache.calls();
    stats->cached_ranges = cache.ranges();
  }
  return 2.0 * sum.imag();
}

}  // namespace detail

double ep(const CharacteristicFunction& cf, const AngleSchedule& schedule,
          const EpOptions& options, EpStats* stats) {
  require_zero_mean(cf, "ep");
  return detail::ep_sum(cf, schedule, options, stats);
}

double ep_full(const CharacteristicFunction& cf, const AngleSchedule& schedule,
               const EpOptions& options) {
  const auto [shifted, mu] = zero_mean(cf);
  return mu + detail::ep_sum(shifted, schedule, options, nullptr);
}

}  // namespace gqaoa
