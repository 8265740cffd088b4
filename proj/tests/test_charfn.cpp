#include <cmath>
#include <random>

#include "doctest.h"
#include "gqaoa/charfn.hpp"
#include "gqaoa/errors.hpp"
#include "gqaoa/problems.hpp"
#include "oracle.hpp"

using namespace gqaoa;

namespace {

std::vector<CharacteristicFunction> all_variants() {
  const auto gauss = CharacteristicFunction::gaussian();
  const auto chi = CharacteristicFunction::chi_square_1();
  const auto emp = CharacteristicFunction::empirical(npp_spectrum(sample_npp(6, 3)));
  return {gauss, chi, emp, CharacteristicFunction::mean_shifted(chi, 1.0),
          CharacteristicFunction::mean_shifted(emp, 0.37)};
}

}  // namespace

TEST_CASE("gaussian at the origin") {
  const CfValue v = cf_eval(CharacteristicFunction::gaussian(), 0.0);
  CHECK(v.gamma == complex(1.0, 0.0));
  CHECK(v.gamma_prime == complex(0.0, 0.0));
}

TEST_CASE("chi-square at the origin has unit mean slope") {
  const CfValue v = cf_eval(CharacteristicFunction::chi_square_1(), 0.0);
  CHECK(v.gamma == complex(1.0, 0.0));
  CHECK(std::abs(v.gamma_prime - complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("chi-square matches the closed form off the origin") {
  const auto cf = CharacteristicFunction::chi_square_1();
  for (double t : {-3.0, -0.5, 0.241, 2.0}) {
    const complex base(1.0, -2.0 * t);
    const complex expected = std::pow(base, -0.5);
    const CfValue v = cf(t);
    CHECK(std::abs(v.gamma - expected) < 1e-14);
    CHECK(std::abs(v.gamma_prime - complex(0.0, 1.0) * std::pow(base, -1.5)) < 1e-14);
  }
}

TEST_CASE("empirical two-level spectrum is (cos t, -sin t)") {
  const auto cf = CharacteristicFunction::empirical(Spectrum({-1.0, 1.0}));
  for (double t : {0.0, 0.3, 1.7, -2.2}) {
    const CfValue v = cf(t);
    CHECK(std::abs(v.gamma - complex(std::cos(t), 0.0)) < 1e-15);
    CHECK(std::abs(v.gamma_prime - complex(-std::sin(t), 0.0)) < 1e-15);
  }
}

TEST_CASE("empirical agrees with a direct complex-exponential sum") {
  const Spectrum s = rcm_spectrum(sample_rcm(7, 11));
  const auto cf = CharacteristicFunction::empirical(s);
  for (double t : {-1.3, 0.2, 2.9}) {
    CHECK(std::abs(cf(t).gamma - oracle::direct_cf(s.values(), t)) < 1e-13);
  }
}

TEST_CASE("non-finite argument is a domain error") {
  CHECK_THROWS_AS(cf_eval(CharacteristicFunction::gaussian(), NAN), DomainError);
  CHECK_THROWS_AS(cf_eval(CharacteristicFunction::chi_square_1(), INFINITY), DomainError);
}

TEST_CASE("spectrum validation") {
  CHECK_THROWS_AS(Spectrum({1.0, 2.0, 3.0}), DomainError);
  CHECK_THROWS_AS(Spectrum({1.0}), DomainError);
  CHECK_THROWS_AS(Spectrum({1.0, NAN}), DomainError);
  CHECK(Spectrum({1.0, 2.0, 3.0, 4.0}).n() == 2);
}

TEST_CASE("cf_mean") {
  CHECK(cf_mean(CharacteristicFunction::gaussian()) == 0.0);
  CHECK(std::abs(cf_mean(CharacteristicFunction::chi_square_1()) - 1.0) < 1e-15);
  const auto emp = CharacteristicFunction::empirical(Spectrum({0.49, 0.01, 0.01, 0.49}));
  CHECK(std::abs(cf_mean(emp) - 0.25) < 1e-15);
}

TEST_CASE("zero_mean") {
  SUBCASE("gaussian is already centred") {
    const auto [shifted, mu] = zero_mean(CharacteristicFunction::gaussian());
    CHECK(mu == 0.0);
    CHECK(shifted.kind() == CharacteristicFunction::Kind::mean_shifted);
    CHECK(std::abs(cf_mean(shifted)) < 1e-12);
  }
  SUBCASE("chi-square shifts by one") {
    const auto [shifted, mu] = zero_mean(CharacteristicFunction::chi_square_1());
    CHECK(std::abs(mu - 1.0) < 1e-15);
    CHECK(std::abs(cf_mean(shifted)) < 1e-12);
  }
  SUBCASE("empirical {-1, 3}") {
    const auto [shifted, mu] =
        zero_mean(CharacteristicFunction::empirical(Spectrum({-1.0, 3.0})));
    CHECK(std::abs(mu - 1.0) < 1e-15);
    for (double t : {0.4, -1.1, 2.5}) {
      const complex i(0.0, 1.0);
      const complex expected = std::exp(-i * t) * (std::exp(-i * t) + std::exp(3.0 * i * t)) / 2.0;
      CHECK(std::abs(shifted(t).gamma - expected) < 1e-15);
    }
  }
}

TEST_CASE("property: normalization, conjugate symmetry and |Gamma| <= 1") {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (const auto& cf : all_variants()) {
    CHECK(std::abs(cf(0.0).gamma - 1.0) < 1e-14);
    for (int k = 0; k < 1000; ++k) {
      const double t = dist(rng);
      const CfValue pos = cf(t);
      const CfValue neg = cf(-t);
      REQUIRE(std::abs(neg.gamma - std::conj(pos.gamma)) < 1e-12);
      REQUIRE(std::abs(neg.gamma_prime + std::conj(pos.gamma_prime)) < 1e-12);
      REQUIRE(std::abs(pos.gamma) <= 1.0 + 1e-14);
    }
  }
}

TEST_CASE("property: derivative matches central differences of Gamma") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  const double h = 1e-5;
  for (const auto& cf : all_variants()) {
    for (int k = 0; k < 100; ++k) {
      const double t = dist(rng);
      const complex fd = (cf(t + h).gamma - cf(t - h).gamma) / (2.0 * h);
      REQUIRE(std::abs(cf(t).gamma_prime - fd) < 1e-6);
    }
  }
}

TEST_CASE("property: empirical RCM cf approaches the gaussian as n grows") {
  std::vector<double> grid;
  for (int k = 0; k <= 60; ++k) grid.push_back(-3.0 + 0.1 * k);
  const auto gauss = CharacteristicFunction::gaussian();
  double previous = INFINITY;
  for (int n : {8, 12, 16}) {
    double avg = 0.0;
    const int seeds = 10;
    for (int s = 0; s < seeds; ++s) {
      const auto cf = CharacteristicFunction::empirical(rcm_spectrum(sample_rcm(n, 1000 + s)));
      double worst = 0.0;
      for (double t : grid) worst = std::max(worst, std::abs(cf(t).gamma - gauss(t).gamma));
      avg += worst / seeds;
    }
    CHECK(avg <= previous);
    previous = avg;
  }
}
