#pragma once

#include <array>

#include "symsep/symmetric.hpp"

namespace symsep {

class Rng;

/// Spectrum of a symmetric three-qubit state: tau1 >= ... >= tau4 >= 0,
/// summing to one.
class Spectrum4Sym {
 public:
  Spectrum4Sym(double a, double b, double c, double d);

  double tau(int i) const { return t_[i - 1]; }  // 1-based
  const std::array<double, 4>& values() const { return t_; }

 private:
  std::array<double, 4> t_;
};

/// The Dicke mixture arranging the spectrum as
/// tau4 |D_3^(3)> + tau1 |D_3^(2)> + tau3 |D_3^(1)> + tau2 |D_3^(0)|,
/// i.e. diag(tau2, tau3, tau1, tau4) over k = 0..3. This is the weight
/// permutation that makes the partial-transpose condition strictest.
SymmetricDensityMatrix dicke_mixture_state(const Spectrum4Sym& s);

/// Closed form lambda_min = (3 tau4 + 2 tau3 - sqrt(p)) / 6: the minimal
/// eigenvalue of the nontrivial block of the embedded mixture's partial
/// transpose. The full 8x8 partial transpose additionally has two structural
/// zero eigenvalues, so its overall minimum is min(0, this value); the sign,
/// which is what the separability condition uses, is unaffected. Throws
/// std::domain_error if the radicand p is negative (never observed on the
/// sorted simplex, but reported rather than clamped).
double lambda_min_obs1(const Spectrum4Sym& s);

/// Sufficient condition for "not SAS":
/// tau2 < 1 - tau3 - tau4 - sqrt(3 tau3 tau4) and tau3 > 0.
bool not_sas_3qubit(const Spectrum4Sym& s);

/// The explicit state showing the condition above is not necessary: a unitary
/// reshuffle of the spectrum (0.362191, 0.213809, 0.213, 0.211) with negative
/// partial transpose even though the spectrum fails the condition.
struct Counterexample {
  SymmetricDensityMatrix rho_pp;
  double pt_min_eig;
};

Counterexample counterexample_state();

Spectrum4Sym counterexample_spectrum();

/// Distance from the maximally mixed state of the boundary spectrum implied
/// by (tau3, tau4): tau2 from the equality of the not-SAS condition, tau1
/// from normalization. Throws std::domain_error when the implied spectrum is
/// not a valid sorted spectrum.
double r_obs1_boundary(double tau3, double tau4);

struct ThreeQubitBallRadii {
  double r_sas_lower;    // 1/(10 sqrt(11))
  double r_sas_upper;    // sqrt(9 - 5 sqrt(3)) / (2 sqrt(6))
  double big_r_sas_upper;  // sqrt(3)/10
};

ThreeQubitBallRadii ball_radii_3qubit();

/// Monte-Carlo estimate of the radius of the minimal ball containing all SAS
/// states. A coarse descending-radius scan seeds a stochastic climb toward
/// the largest-radius spectrum whose sampled orbit shows no entanglement; the
/// estimate converges from below toward R_SAS. Deterministic given the rng.
double estimate_R_sas_3qubit(int n_spectra, int n_orbit_samples, Rng& rng);

}  // namespace symsep
