#include "symsep/three_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "symsep/measures.hpp"

namespace symsep {

Spectrum4Sym::Spectrum4Sym(double a, double b, double c, double d) {
  std::array<double, 4> v{a, b, c, d};
  std::sort(v.begin(), v.end(), std::greater<>());
  if (v.back() < -tols().spectrum_renorm) {
    throw std::invalid_argument("spectrum: negative entry");
  }
  for (auto& x : v) x = std::max(0.0, x);
  const double sum = v[0] + v[1] + v[2] + v[3];
  if (std::abs(sum - 1.0) > tols().spectrum_renorm) {
    throw std::invalid_argument("spectrum: normalization correction too large");
  }
  for (auto& x : v) x /= sum;
  t_ = v;
}

SymmetricDensityMatrix dicke_mixture_state(const Spectrum4Sym& s) {
  Matrix m(4, 4);
  m(0, 0) = s.tau(2);  // k = 0
  m(1, 1) = s.tau(3);  // k = 1
  m(2, 2) = s.tau(1);  // k = 2
  m(3, 3) = s.tau(4);  // k = 3
  return make_symmetric_density(3, std::move(m));
}

double lambda_min_obs1(const Spectrum4Sym& s) {
  const double t2 = s.tau(2), t3 = s.tau(3), t4 = s.tau(4);
  const double p = 8.0 - 16.0 * t4 + 17.0 * t4 * t4 - 16.0 * t3 +
                   4.0 * t4 * t3 + 12.0 * t3 * t3 - 16.0 * t2 +
                   16.0 * t4 * t2 + 16.0 * t3 * t2 + 8.0 * t2 * t2;
  if (p < 0.0) {
    throw std::domain_error("lambda_min_obs1: negative radicand");
  }
  return (3.0 * t4 + 2.0 * t3 - std::sqrt(p)) / 6.0;
}

bool not_sas_3qubit(const Spectrum4Sym& s) {
  const double t2 = s.tau(2), t3 = s.tau(3), t4 = s.tau(4);
  return t2 < 1.0 - t3 - t4 - std::sqrt(3.0 * t3 * t4) && t3 > 0.0;
}

Spectrum4Sym counterexample_spectrum() {
  return Spectrum4Sym(0.362191, 0.213809, 0.213, 0.211);
}

Counterexample counterexample_state() {
  Matrix u(4, 4);
  static constexpr double kEntries[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) u(i, j) = 0.5 * kEntries[i][j];

  const SymmetricDensityMatrix rho_p = dicke_mixture_state(counterexample_spectrum());
  SymmetricDensityMatrix rho_pp =
      make_symmetric_density(3, u * rho_p.matrix * u.adjoint());
  const double lmin = negativity(embed_full(rho_pp)).lambda_min;
  return {std::move(rho_pp), lmin};
}

double r_obs1_boundary(double tau3, double tau4) {
  const double cross = std::sqrt(3.0 * tau3 * tau4);
  const double tau2 = 1.0 - tau3 - tau4 - cross;
  const double tau1 = cross;
  constexpr double kSlack = 1e-12;
  if (tau4 < -kSlack || tau3 < tau4 - kSlack || tau2 < tau3 - kSlack ||
      tau1 < tau2 - kSlack) {
    throw std::domain_error("r_obs1_boundary: implied spectrum not sorted");
  }
  const double a = tau3 - 0.25;
  const double b = tau4 - 0.25;
  const double c = cross - 0.25;
  const double d = tau3 + tau4 + cross - 0.75;
  return std::sqrt(a * a + b * b + c * c + d * d);
}

ThreeQubitBallRadii ball_radii_3qubit() {
  return {1.0 / (10.0 * std::sqrt(11.0)),
          std::sqrt(9.0 - 5.0 * std::sqrt(3.0)) / (2.0 * std::sqrt(6.0)),
          std::sqrt(3.0) / 10.0};
}

namespace {

struct Direction {
  std::array<double, 4> d;  // traceless, unit Hilbert-Schmidt norm
};

Direction random_direction(Rng& rng) {
  Direction dir;
  double mean = 0.0;
  for (auto& x : dir.d) {
    x = rng.gaussian();
    mean += x;
  }
  mean /= 4.0;
  double norm = 0.0;
  for (auto& x : dir.d) {
    x -= mean;
    norm += x * x;
  }
  norm = std::sqrt(norm);
  for (auto& x : dir.d) x /= norm;
  return dir;
}

bool spectrum_at(double r, const Direction& dir, std::array<double, 4>& out) {
  for (int i = 0; i < 4; ++i) {
    out[i] = 0.25 + r * dir.d[i];
    if (out[i] < 0.0) return false;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return true;
}

double pt_min_eig(const SymmetricDensityMatrix& rho) {
  return eigvals_hermitian(partial_transpose(embed_full(rho), 0)).back();
}

/// True when neither the Dicke-mixture arrangement itself (the identity orbit
/// point, which realizes the strictest diagonal witness) nor any of the Haar
/// orbit samples shows negativity above threshold.
bool sampled_orbit_separable(const std::array<double, 4>& tau, int n_samples,
                             Rng rng) {
  constexpr double kEigThreshold = -5e-10;  // negativity > 1e-9
  const SymmetricDensityMatrix rho =
      dicke_mixture_state(Spectrum4Sym(tau[0], tau[1], tau[2], tau[3]));
  if (pt_min_eig(rho) < kEigThreshold) return false;
  for (int i = 0; i < n_samples; ++i) {
    const Matrix u = haar_random_unitary(4, rng);
    const Matrix conj = u * rho.matrix * u.adjoint();
    const SymmetricDensityMatrix moved{3, conj};
    if (pt_min_eig(moved) < kEigThreshold) return false;
  }
  return true;
}

}  // namespace

double estimate_R_sas_3qubit(int n_spectra, int n_orbit_samples, Rng& rng) {
  if (n_spectra < 1 || n_orbit_samples < 1) {
    throw std::invalid_argument("estimate_R_sas_3qubit: counts must be positive");
  }
  // Slightly above sqrt(3)/10 so the cap itself is probed from both sides.
  constexpr double kRadiusCap = 0.1733;

  // Coarse phase: random spectra scanned by decreasing radius; the first one
  // whose sampled orbit stays separable seeds the refinement.
  const int n_coarse = std::max(1, n_spectra / 5);
  std::vector<std::pair<double, Direction>> coarse;
  coarse.reserve(n_coarse);
  for (int i = 0; i < n_coarse; ++i) {
    coarse.emplace_back(kRadiusCap * rng.uniform(), random_direction(rng));
  }
  std::sort(coarse.begin(), coarse.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::uint64_t stream = 0;
  double best_r = 0.0;
  Direction best_dir{};
  bool seeded = false;
  std::array<double, 4> tau;
  for (const auto& [r, dir] : coarse) {
    if (!spectrum_at(r, dir, tau)) continue;
    if (sampled_orbit_separable(tau, n_orbit_samples, rng.split(stream++))) {
      best_r = r;
      best_dir = dir;
      seeded = true;
      break;
    }
  }
  if (!seeded) return 0.0;

  // Refinement: stochastic climb in (radius, direction) with adaptive steps.
  // Proposals found entangled (or leaving the simplex) shrink the steps.
  double sigma = 0.3;
  double r_step = 0.004;
  const int n_refine = n_spectra - n_coarse;
  for (int i = 0; i < n_refine; ++i) {
    Direction cand = best_dir;
    double mean = 0.0;
    for (int k = 0; k < 4; ++k) {
      cand.d[k] += sigma * rng.gaussian();
      mean += cand.d[k];
    }
    mean /= 4.0;
    double norm = 0.0;
    for (auto& x : cand.d) {
      x -= mean;
      norm += x * x;
    }
    norm = std::sqrt(norm);
    for (auto& x : cand.d) x /= norm;
    const double r_new = best_r + r_step * rng.uniform();

    bool ok = spectrum_at(r_new, cand, tau) &&
              sampled_orbit_separable(tau, n_orbit_samples, rng.split(stream++));
    if (ok) {
      best_r = r_new;
      best_dir = cand;
      sigma = std::min(sigma * 1.3, 0.5);
      r_step = std::min(r_step * 1.3, 0.01);
    } else {
      sigma = std::max(sigma * 0.8, 0.01);
      r_step = std::max(r_step * 0.8, 1e-5);
    }
  }
  return best_r;
}

}  // namespace symsep
