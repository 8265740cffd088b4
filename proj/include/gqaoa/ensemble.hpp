#pragma once

#include <cstdint>
#include <vector>

#include "gqaoa/charfn.hpp"

namespace gqaoa {

// Depth-p QAOA angles. Layer i (1-based) applies the problem phase gammas[i-1]
// and then the Grover driver betas[i-1].
struct AngleSchedule {
  std::vector<double> gammas;
  std::vector<double> betas;

  AngleSchedule() = default;
  // Throws DomainError on length mismatch, empty schedule or non-finite angle.
  AngleSchedule(std::vector<double> gammas, std::vector<double> betas);

  int depth() const noexcept { return static_cast<int>(gammas.size()); }
  void validate() const;

  // All-zero schedule of depth p.
  static AngleSchedule zeros(int p);
  // Packs (gammas, betas) as one 2p-vector [gammas..., betas...].
  std::vector<double> flatten() const;
  static AngleSchedule unflatten(const std::vector<double>& x);
};

// Inclusive 1-based layer range [first, last].
struct IndexRange {
  int first;
  int last;
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Grouping of layers induced by the projector positions of one bra/ket mask.
// Bit i of the mask (i = 1..p, stored at 1 << (i - 1)) places a driver
// projector after layer i.
struct TermPartition {
  std::vector<int> boundary_set;        // {0} plus set bit positions, ascending
  std::vector<IndexRange> partitions;   // (s_k, s_{k+1}] for consecutive boundaries
  std::vector<int> central_indices;     // layers above max(boundary_set)
};

TermPartition partitions_of(std::uint64_t mask, int p);

inline constexpr int kDefaultMaxDepth = 10;

struct EpOptions {
  int max_depth = kDefaultMaxDepth;
};

// Bookkeeping from one ep evaluation.
struct EpStats {
  std::uint64_t off_diagonal_terms = 0;
  std::uint64_t cf_calls = 0;
  std::uint64_t cached_ranges = 0;
};

// B(beta) = exp(i beta) - 1.
complex b_factor(double beta);

// Depth-1 expectation with the mean kept explicit:
// mean * (1 + |B|^2 |Gamma|^2) + 2 Im(conj(B) conj(Gamma) Gamma').
double e1(const CharacteristicFunction& cf, double gamma, double beta);

// Depth-2 closed form. Requires |cf_mean(cf)| <= 1e-10 (see zero_mean).
double e2(const CharacteristicFunction& cf, const AngleSchedule& schedule);

// Arbitrary depth, summing the 2^(p-1) (2^p - 1) off-diagonal bra/ket mask
// pairs. Requires a zero-mean cf; throws PreconditionError otherwise and
// ResourceLimitError when p exceeds options.max_depth.
double ep(const CharacteristicFunction& cf, const AngleSchedule& schedule,
          const EpOptions& options = {}, EpStats* stats = nullptr);

// mu + ep(shifted) with (shifted, mu) = zero_mean(cf); valid for any mean.
double ep_full(const CharacteristicFunction& cf, const AngleSchedule& schedule,
               const EpOptions& options = {});

namespace detail {
// ep without the zero-mean check; callers guarantee the precondition.
double ep_sum(const CharacteristicFunction& cf, const AngleSchedule& schedule,
              const EpOptions& options, EpStats* stats);
}  // namespace detail

}  // namespace gqaoa
