#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gqaoa/errors.hpp"
#include "gqaoa/experiments.hpp"
#include "gqaoa/problems.hpp"

using namespace gqaoa;
using std::numbers::pi;

TEST_CASE("depth sweep on the gaussian ensemble") {
  OptimizationConfig config;
  config.starts = 16;
  const auto table = depth_sweep(CharacteristicFunction::gaussian(), 3, config);
  REQUIRE(table.rows.size() == 3);
  CHECK(std::abs(table.rows[0].value + std::sqrt(2.0) * std::exp(-0.5)) < 1e-6);
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(table.rows[i].p == static_cast<int>(i) + 1);
    CHECK(table.rows[i].value <= table.rows[i - 1].value + 1e-9);
  }
  CHECK_THROWS_AS(depth_sweep(CharacteristicFunction::gaussian(), 0, config), DomainError);
  CHECK_THROWS_AS(depth_sweep(CharacteristicFunction::gaussian(), 11, config), DomainError);
}

TEST_CASE("depth sweep on the chi-square ensemble") {
  OptimizationConfig config;
  config.starts = 16;
  const auto table = depth_sweep(CharacteristicFunction::chi_square_1(), 2, config);
  CHECK(std::abs(table.rows[0].value - 0.557) < 2e-3);
  CHECK(table.rows[1].value < table.rows[0].value);
}

TEST_CASE("convergence study determinism and validation") {
  OptimizationConfig config;
  config.starts = 4;
  config.gradient_tolerance = 1e-6;
  const auto a = convergence_study(ProblemKind::npp, 1, {4, 6}, 1, 5, config);
  const auto b = convergence_study(ProblemKind::npp, 1, {4, 6}, 1, 5, config);
  REQUIRE(a.rows.size() == 2);
  CHECK(a.rows[0].mean_gammas == b.rows[0].mean_gammas);
  CHECK(a.rows[1].mean_value == b.rows[1].mean_value);
  CHECK(a.rows[0].se_gammas[0] == 0.0);
  CHECK(a.rows[0].instances == 1);

  const auto rcm = convergence_study(ProblemKind::rcm, 2, {5}, 3, 1, config);
  CHECK(rcm.rows[0].mean_gammas.size() == 2);

  CHECK_THROWS_AS(convergence_study(ProblemKind::npp, 1, {21}, 1, 0, config), ResourceLimitError);
  CHECK_THROWS_AS(convergence_study(ProblemKind::npp, 1, {8, 6}, 1, 0, config), DomainError);
  CHECK_THROWS_AS(convergence_study(ProblemKind::npp, 1, {6}, 0, 0, config), DomainError);
  CHECK_THROWS_AS(parse_problem_kind("maxcut"), DomainError);
}

TEST_CASE("landscape axes") {
  const auto pts = GridAxis{0.0, 1.0, 5}.points();
  CHECK(pts == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS((GridAxis{0.0, 1.0, 1}.points()), DomainError);
  CHECK_THROWS_AS((GridAxis{1.0, 1.0, 3}.points()), DomainError);
}

TEST_CASE("landscape entries are depth-1 ep_full values") {
  const Spectrum s = npp_spectrum(sample_npp(6, 2));
  const auto grid = landscape_scan(s, {0.0, 1.5, 7}, {0.0, 2 * pi, 9});
  const auto cf = CharacteristicFunction::empirical(s);
  for (std::size_t i = 0; i < grid.gammas.size(); ++i) {
    CHECK(grid.values[i][0] == doctest::Approx(s.mean()).epsilon(1e-14));
    for (std::size_t j = 0; j < grid.betas.size(); ++j) {
      const double ref = ep_full(cf, AngleSchedule({grid.gammas[i]}, {grid.betas[j]}));
      CHECK(std::abs(grid.values[i][j] - ref) < 1e-12);
    }
  }
}

TEST_CASE("chi-square landscape minimum sits at the known optimum") {
  // Grid steps chosen so (0.241, 5.162) is a node.
  const GridAxis gammas{0.001, 0.481, 241};
  const GridAxis betas{4.962, 5.362, 201};
  const auto grid = landscape_scan(CharacteristicFunction::chi_square_1(), gammas, betas);
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < grid.gammas.size(); ++i)
    for (std::size_t j = 0; j < grid.betas.size(); ++j)
      if (grid.values[i][j] < grid.values[bi][bj]) bi = i, bj = j;
  CHECK(std::abs(grid.gammas[bi] - 0.241) < 1e-9);
  CHECK(std::abs(grid.betas[bj] - 5.162) < 1e-9);
  CHECK(std::abs(grid.values[bi][bj] - 0.557) < 1e-3);
}

TEST_CASE("gaussian landscape sign symmetry") {
  const GridAxis gammas{-1.0, 1.0, 21};
  const GridAxis betas{0.0, 2 * pi, 17};
  const auto grid = landscape_scan(CharacteristicFunction::gaussian(), gammas, betas);
  const std::size_t ng = grid.gammas.size(), nb = grid.betas.size();
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      CHECK(std::abs(grid.values[i][j] - grid.values[ng - 1 - i][nb - 1 - j]) < 1e-12);
}

TEST_CASE("npp ensemble landscape relaxes toward the mean at large gamma") {
  // The deviation is dominated by |B|^2 |Gamma|^2 ~ 2 / gamma for the chi-square cf.
  double previous = INFINITY;
  for (double g : {2.0, 5.0, 10.0, 50.0, 200.0}) {
    const auto grid = landscape_scan(CharacteristicFunction::chi_square_1(), {g, g + 1.0, 2},
                                     kDefaultBetaAxis);
    double worst = 0.0;
    for (double v : grid.values[0]) worst = std::max(worst, std::abs(v - 1.0));
    CHECK(worst < previous);
    CHECK(worst < 2.01 / g);
    previous = worst;
  }
  CHECK(previous < 0.05);
}

TEST_CASE("sup_distance") {
  const auto a = landscape_scan(CharacteristicFunction::chi_square_1(), {0, 1, 3}, {0, 1, 3});
  CHECK(sup_distance(a, a) == 0.0);
  const auto b = landscape_scan(CharacteristicFunction::chi_square_1(), {0, 2, 3}, {0, 1, 3});
  CHECK_THROWS_AS(sup_distance(a, b), DomainError);
}
