#pragma once

#include <cstdint>
#include <vector>

#include "gqaoa/charfn.hpp"

namespace gqaoa {

// Random cost model realised as n independent spins: C(z) = sum_i (-1)^{z_i} g_i
// with g_i ~ Normal(0, 1/n), so every spectrum has unit variance.
struct RcmInstance {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> weights;
};

// Number partitioning with squared residue C(z) = (sum_i (-1)^{z_i} x_i)^2.
struct NppInstance {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> numbers;
};

// Upper end of the uniform support of the NPP numbers. sqrt(3/n) makes the
// signed sum unit-variance, hence the residue has unit mean.
double npp_x_max(int n);

RcmInstance sample_rcm(int n, std::uint64_t seed);
NppInstance sample_npp(int n, std::uint64_t seed);

// Bit i of z (least significant = variable 0) selects the sign (-1)^{z_i}.
Spectrum rcm_spectrum(const RcmInstance& instance);
Spectrum npp_spectrum(const NppInstance& instance);

}  // namespace gqaoa
