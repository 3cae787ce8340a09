#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "symsep/measures.hpp"
#include "symsep/two_qubit.hpp"
#include "symsep/verify.hpp"

using namespace symsep;

TEST_CASE("spectrum construction sorts, normalizes, validates") {
  const Spectrum3 s(0.2, 0.5, 0.3);
  CHECK(s.tau1() == 0.5);
  CHECK(s.tau2() == 0.3);
  CHECK(s.tau3() == 0.2);
  CHECK_THROWS_AS(Spectrum3(0.9, 0.2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum3(0.5, 0.3, 0.3), std::invalid_argument);
  CHECK_NOTHROW(Spectrum3(0.5 + 1e-10, 0.3, 0.2));
}

TEST_CASE("max_negativity_su4") {
  CHECK(max_negativity_su4(Spectrum4(1, 0, 0, 0)) == doctest::Approx(1.0));
  CHECK(max_negativity_su4(Spectrum4(1.0 / 3, 1.0 / 3, 1.0 / 3, 0)) == 0.0);
  CHECK(max_negativity_su4(Spectrum4(0.5, 0.25, 0.15, 0.1)) ==
        doctest::Approx(std::hypot(0.35, 0.15) - 0.35).epsilon(1e-12));
}

TEST_CASE("is_as_su4") {
  CHECK(is_as_su4(Spectrum4(0.25, 0.25, 0.25, 0.25)));
  CHECK(is_as_su4(Spectrum4(1.0 / 3, 1.0 / 3, 1.0 / 3, 0)));
  CHECK(is_as_su4(Spectrum4(0.4, 0.3, 0.2, 0.1)));
  CHECK_FALSE(is_as_su4(Spectrum4(1, 0, 0, 0)));
}

TEST_CASE("johnston_as") {
  CHECK(johnston_as({0.25, 0.25, 0.25, 0.25}, 2));
  CHECK_FALSE(johnston_as({0.9, 0.1, 0.0, 0.0}, 2));
  CHECK_THROWS_AS(johnston_as({0.5, 0.5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(johnston_as({0.1, 0.9, 0.0, 0.0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(johnston_as({0.5, 0.3, 0.1, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("max_negativity_su3 endpoints") {
  CHECK(max_negativity_su3(Spectrum3(1, 0, 0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_negativity_su3(Spectrum3(1.0 / 3, 1.0 / 3, 1.0 / 3)) == 0.0);
  CHECK(max_negativity_su3(Spectrum3(0.5, 0.25, 0.25)) == 0.0);
  CHECK(max_negativity_su3(Spectrum3(4.0 / 9, 4.0 / 9, 1.0 / 9)) <= 1e-15);
}

TEST_CASE("optimal_state realizes the closed form") {
  const Spectrum3 s(0.5, 0.3, 0.2);
  const auto rho = optimal_state(s);
  CHECK(std::abs(rho.matrix(0, 0).real() - 0.2) < 1e-15);
  CHECK(std::abs(rho.matrix(1, 1).real() - 0.5) < 1e-15);
  CHECK(std::abs(rho.matrix(2, 2).real() - 0.3) < 1e-15);
  CHECK(negativity(embed_full(rho)).negativity ==
        doctest::Approx(max_negativity_su3(s)).epsilon(1e-10));
}

TEST_CASE("theorem consistency on random spectra") {
  Rng rng(404);
  for (int i = 0; i < 1000; ++i) {
    const Spectrum3 s = random_spectrum3(rng);
    const double direct = negativity(embed_full(optimal_state(s))).negativity;
    CHECK(std::abs(direct - max_negativity_su3(s)) < 1e-10);
  }
}

TEST_CASE("max_concurrence_su3") {
  CHECK(max_concurrence_su3(Spectrum3(1, 0, 0)) == 1.0);
  CHECK(max_concurrence_su3(Spectrum3(0.5, 0.25, 0.25)) == 0.0);
  CHECK(max_concurrence_su3(Spectrum3(0.6, 0.3, 0.1)) ==
        doctest::Approx(0.6 - 2 * std::sqrt(0.03)).epsilon(1e-12));
  const Spectrum3 s(0.6, 0.3, 0.1);
  CHECK(concurrence(embed_full(optimal_state(s))) ==
        doctest::Approx(max_concurrence_su3(s)).epsilon(1e-9));
}

TEST_CASE("is_sas") {
  CHECK(is_sas(Spectrum3(1.0 / 3, 1.0 / 3, 1.0 / 3)));
  CHECK(is_sas(Spectrum3(4.0 / 9, 4.0 / 9, 1.0 / 9)));  // boundary
  CHECK(is_sas(Spectrum3(0.5, 0.25, 0.25)));            // boundary
  CHECK_FALSE(is_sas(Spectrum3(0.9, 0.1, 0.0)));
  CHECK_FALSE(is_sas(Spectrum3(0.5, 0.5, 0.0)));
}

TEST_CASE("critical points: minimum matches the closed form") {
  const Spectrum3 s(0.5, 0.3, 0.2);
  const auto pts = critical_point_values(s);
  double min_l = 1.0;
  for (const auto& p : pts) min_l = std::min(min_l, p.lambda_value);
  CHECK(min_l == doctest::Approx(0.5 * (0.5 - std::sqrt(0.26))).epsilon(1e-12));

  const auto pts0 = critical_point_values(Spectrum3(1.0 / 3, 1.0 / 3, 1.0 / 3));
  double min_l0 = 1.0;
  for (const auto& p : pts0) min_l0 = std::min(min_l0, p.lambda_value);
  CHECK(min_l0 == doctest::Approx(1.0 / 6).epsilon(1e-12));
}

TEST_CASE("critical points: central case always present with value 1/2") {
  Rng rng(505);
  for (int i = 0; i < 50; ++i) {
    const auto pts = critical_point_values(random_spectrum3(rng));
    int central = 0;
    for (const auto& p : pts) {
      if (p.case_id == CriticalCase::Case1Central) {
        ++central;
        CHECK(p.lambda_value == 0.5);
      }
    }
    CHECK(central == 6);  // one per permutation
  }
}

TEST_CASE("critical-point completeness over random spectra") {
  Rng rng(606);
  for (int i = 0; i < 1000; ++i) {
    const Spectrum3 s = random_spectrum3(rng);
    double min_l = 1.0;
    for (const auto& p : critical_point_values(s))
      min_l = std::min(min_l, p.lambda_value);
    const double expected =
        0.5 * (s.tau2() + s.tau3() - std::hypot(s.tau1(), s.tau2() - s.tau3()));
    CHECK(std::abs(min_l - expected) < 1e-10);
  }
}

TEST_CASE("full-orbit maximum dominates the symmetric one") {
  Rng rng(707);
  for (int i = 0; i < 1000; ++i) {
    const Spectrum3 s = random_spectrum3(rng);
    const Spectrum4 padded(s.tau1(), s.tau2(), s.tau3(), 0.0);
    CHECK(max_negativity_su4(padded) >= max_negativity_su3(s) - 1e-12);
  }
}

TEST_CASE("radius") {
  CHECK(radius(maximally_mixed_symmetric(2)) == 0.0);
  CHECK(radius(maximally_mixed_symmetric(3)) == 0.0);
  CHECK(radius(optimal_state(Spectrum3(1, 0, 0))) ==
        doctest::Approx(std::sqrt(2.0 / 3)).epsilon(1e-12));
  Matrix pure3(4, 4);
  pure3(0, 0) = 1.0;
  CHECK(radius(make_symmetric_density(3, std::move(pure3))) ==
        doctest::Approx(std::sqrt(3.0 / 4)).epsilon(1e-12));
}

TEST_CASE("r_of_spectrum agrees with the state-based radius") {
  CHECK(r_of_spectrum(Spectrum3(1.0 / 3, 1.0 / 3, 1.0 / 3)) == 0.0);
  CHECK(r_of_spectrum(Spectrum3(0.5, 0.25, 0.25)) ==
        doctest::Approx(1.0 / (2 * std::sqrt(6.0))).epsilon(1e-12));
  CHECK(r_of_spectrum(Spectrum3(4.0 / 9, 4.0 / 9, 1.0 / 9)) ==
        doctest::Approx(2.0 / (3 * std::sqrt(6.0))).epsilon(1e-12));
  Rng rng(808);
  for (int i = 0; i < 200; ++i) {
    const Spectrum3 s = random_spectrum3(rng);
    CHECK(std::abs(r_of_spectrum(s) - radius(optimal_state(s))) < 1e-12);
  }
}

TEST_CASE("sas_boundary_r values and domain") {
  CHECK(sas_boundary_r(1.0 / 9) ==
        doctest::Approx(2.0 / (3 * std::sqrt(6.0))).epsilon(1e-12));
  CHECK(sas_boundary_r(0.25) ==
        doctest::Approx(1.0 / (2 * std::sqrt(6.0))).epsilon(1e-12));
  CHECK_THROWS_AS(sas_boundary_r(0.05), std::domain_error);
  CHECK_THROWS_AS(sas_boundary_r(0.5), std::domain_error);
}

TEST_CASE("sas_boundary_r is strictly decreasing up to its minimum at 1/4") {
  double prev = sas_boundary_r(1.0 / 9);
  for (int i = 1; i <= 200; ++i) {
    const double t3 = 1.0 / 9 + (0.25 - 1.0 / 9) * i / 200.0;
    const double r = sas_boundary_r(t3);
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("two-qubit ball radii") {
  const auto b = ball_radii_2qubit();
  CHECK(b.r_sas == doctest::Approx(0.2041241452).epsilon(1e-9));
  CHECK(b.big_r_sas == doctest::Approx(0.2721655270).epsilon(1e-9));
  CHECK(b.r_lower_bound == doctest::Approx(0.0771517).epsilon(1e-6));
  CHECK(b.r_sas < b.big_r_sas);
  CHECK(b.r_lower_bound < b.r_sas);
}

TEST_CASE("sas iff zero max negativity, with boundary perturbations") {
  Rng rng(909);
  for (int i = 0; i < 10000; ++i) {
    const Spectrum3 s = random_spectrum3(rng);
    CHECK(is_sas(s) == (max_negativity_su3(s) < 1e-9));
  }
  for (int i = 0; i < 1000; ++i) {
    const double t3 = 1.0 / 9 + (0.25 - 1.0 / 9) * rng.uniform();
    const double sq = 1.0 - std::sqrt(t3);
    const double t2 = sq * sq;
    const double eps = (i % 2 ? 1.0 : -1.0) * 1e-8;
    const Spectrum3 s(1.0 - t2 - t3 - eps, t2 + eps, t3);
    CHECK(is_sas(s) == (max_negativity_su3(s) < 1e-9));
  }
}
