#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "symsep/grid.hpp"
#include "symsep/three_qubit.hpp"
#include "symsep/two_qubit.hpp"

using namespace symsep;

TEST_CASE("csv round trip is byte identical") {
  GridResult g = fig1_grid(12);
  g.seed = 99;
  const std::string csv = grid_to_csv(g);
  const std::string again = grid_to_csv(grid_from_csv(csv));
  CHECK(csv == again);
}

TEST_CASE("csv carries metadata") {
  GridResult g = fig1_grid(5);
  g.seed = 7;
  const GridResult back = grid_from_csv(grid_to_csv(g));
  CHECK(back.resolution == 5);
  CHECK(back.seed == 7);
  CHECK(back.tool_version == kToolVersion);
  CHECK(back.axis_x == "tau3");
  CHECK(back.axis_y == "tau2");
  CHECK(back.grid.size() == g.grid.size());
  CHECK(back.boundary.size() == g.boundary.size());
}

TEST_CASE("csv parser rejects malformed input") {
  CHECK_THROWS_AS(grid_from_csv("no metadata\n"), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_csv("# resolution=bad\n"), std::invalid_argument);
  CHECK_THROWS_AS(
      grid_from_csv("# resolution=2 seed=0 version=x\nseries,a,b,value\n"
                    "mystery,0,0,0\n"),
      std::invalid_argument);
}

TEST_CASE("fig1: corner values and boundary endpoints") {
  const GridResult g = fig1_grid(50);
  // (tau3, tau2) = (0, 0): pure state, value 1.
  CHECK(g.grid.front().x == 0.0);
  CHECK(g.grid.front().y == 0.0);
  CHECK(g.grid.front().value == doctest::Approx(1.0).epsilon(1e-12));
  // (1/3, 1/3) corner: maximally mixed, value 0.
  CHECK(g.grid.back().x == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(g.grid.back().y == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(g.grid.back().value == 0.0);
  // Boundary endpoints (1/9, 4/9) and (1/4, 1/4), value 0 on the border.
  CHECK(g.boundary.front().x == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(g.boundary.front().y == doctest::Approx(4.0 / 9).epsilon(1e-12));
  CHECK(g.boundary.back().x == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(g.boundary.back().y == doctest::Approx(0.25).epsilon(1e-12));
  for (const auto& p : g.boundary) CHECK(std::abs(p.value) < 1e-9);
  CHECK_THROWS_AS(fig1_grid(1), std::invalid_argument);
}

TEST_CASE("fig2: wedge, boundary endpoint, recovered spectra are sorted") {
  const GridResult g = fig2_grid(40);
  for (const auto& p : g.grid) {
    const double lo = (1.0 - 3.0 * p.x) / std::sqrt(6.0);
    const double hi = std::sqrt(2.0 / 3.0) * (1.0 - 3.0 * p.x);
    CHECK(p.y >= lo - 1e-12);
    CHECK(p.y <= hi + 1e-12);
    CHECK(std::isfinite(p.value));
  }
  // tau3 = 1/3 column collapses to r = 0 with value 0.
  CHECK(g.grid.back().y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.grid.back().value == 0.0);
  CHECK(g.boundary.front().x == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(g.boundary.front().y ==
        doctest::Approx(2.0 / (3.0 * std::sqrt(6.0))).epsilon(1e-12));
  for (const auto& p : g.boundary) CHECK(std::abs(p.value) < 1e-9);
}

TEST_CASE("fig2: every grid point's recovered tau2 respects the sorting") {
  const GridResult g = fig2_grid(40);
  for (const auto& p : g.grid) {
    // Re-derive tau2 exactly as the generator does and check the invariants.
    const double t3 = p.x;
    const double d = 1.0 - 3.0 * t3;
    double disc = 2.0 * p.y * p.y - d * d / 3.0;
    if (disc < 0.0) disc = 0.0;
    double t2 = ((1.0 - t3) - std::sqrt(disc)) / 2.0;
    if (t2 < t3 - 1e-9) t2 = ((1.0 - t3) + std::sqrt(disc)) / 2.0;
    const double t1 = 1.0 - t2 - t3;
    CHECK(t1 >= t2 - 1e-9);
    CHECK(t2 >= t3 - 1e-9);
  }
}

TEST_CASE("fig3: region indicator and boundary radii") {
  const GridResult g = fig3_grid(60);
  for (const auto& p : g.grid) {
    CHECK((p.value == 0.0 || p.value == 1.0));
  }
  // (1/4, 1/4) is in the inner region.
  bool found = false;
  for (const auto& p : g.grid) {
    if (std::abs(p.x - 0.25) < 2e-3 && std::abs(p.y - 0.25) < 2e-3) {
      CHECK(p.value == 0.0);
      found = true;
    }
  }
  CHECK(found);
  // Boundary series values live between the two closed-form extrema.
  const auto b = ball_radii_3qubit();
  CHECK(!g.boundary.empty());
  for (const auto& p : g.boundary) {
    CHECK(p.value >= b.r_sas_upper - 1e-9);
    CHECK(p.value <= b.big_r_sas_upper + 1e-9);
  }
}

TEST_CASE("fig3 matches the pointwise condition") {
  const GridResult g = fig3_grid(30);
  for (const auto& p : g.grid) {
    const bool hit =
        p.x > 0.0 && p.x < 1.0 - p.x - p.y - std::sqrt(3.0 * p.x * p.y);
    CHECK(p.value == (hit ? 1.0 : 0.0));
  }
}
