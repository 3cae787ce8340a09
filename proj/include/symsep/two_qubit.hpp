#pragma once

#include <array>
#include <vector>

#include "symsep/symmetric.hpp"

namespace symsep {

/// Spectrum of a symmetric two-qubit state: tau1 >= tau2 >= tau3 >= 0,
/// summing to one. Construction re-sorts and re-normalizes; a normalization
/// correction beyond tolerance is an error.
class Spectrum3 {
 public:
  Spectrum3(double a, double b, double c);

  double tau1() const { return t_[0]; }
  double tau2() const { return t_[1]; }
  double tau3() const { return t_[2]; }
  const std::array<double, 3>& values() const { return t_; }

 private:
  std::array<double, 3> t_;
};

/// Spectrum of a general two-qubit state, lambda1 >= ... >= lambda4 >= 0.
class Spectrum4 {
 public:
  Spectrum4(double a, double b, double c, double d);

  double lambda(int i) const { return l_[i - 1]; }  // 1-based
  const std::array<double, 4>& values() const { return l_; }

 private:
  std::array<double, 4> l_;
};

/// Verstraete-Audenaert-De Moor maximum over the full SU(4) orbit.
double max_negativity_su4(const Spectrum4& s);

/// Absolute separability over SU(4): (l1 - l3)^2 - 4 l2 l4 <= 0.
bool is_as_su4(const Spectrum4& s);

/// Johnston criterion for absolute separability of a 2 x m bipartite state:
/// l1 <= l_{2m-1} + 2 sqrt(l_{2m-2} l_{2m}). Input sorted non-ascending,
/// length 2m with m >= 2, summing to one.
bool johnston_as(const std::vector<double>& spectrum, int m);

/// Maximal negativity over the symmetric SU(3) orbit:
/// max(0, sqrt(tau1^2 + (tau2 - tau3)^2) - tau2 - tau3).
double max_negativity_su3(const Spectrum3& s);

/// The orbit state attaining the maximum: diag(tau3, tau1, tau2) in the
/// Dicke basis.
SymmetricDensityMatrix optimal_state(const Spectrum3& s);

/// Maximal concurrence over the SU(3) orbit: max(0, tau1 - 2 sqrt(tau2 tau3)).
/// Optimality is a numerically supported claim, not a proved one.
double max_concurrence_su3(const Spectrum3& s);

/// Symmetric absolute separability: sqrt(tau2) + sqrt(tau3) >= 1. The
/// boundary counts as SAS, with symmetric floating-point slack.
bool is_sas(const Spectrum3& s);

enum class CriticalCase {
  Case1MinusRoot,  // delta = pi/2 branch, t2 >= t3
  Case1PlusRoot,   // delta = pi/2 branch, t2 <= t3
  Case1AlphaPi2,   // alpha = pi/2
  Case1Central,    // alpha = 0, beta = pi/4; Lambda = 1/2 always
  Case2MinusRoot,  // Sigma3 omitted, t1 >= t2
  Case2PlusRoot,   // Sigma3 omitted, t1 <= t2
};

/// One critical point of the reduced objective Lambda, for a fixed
/// permutation (t1, t2, t3) of the spectrum. `parameters` holds the realized
/// z (case 1, first slot) or (y1, y2) (case 2) where applicable.
struct CriticalPoint {
  CriticalCase case_id;
  std::array<int, 3> permutation;  // indices into the sorted spectrum
  double lambda_value;
  std::array<double, 2> parameters;
};

/// All critical points of Lambda over every spectrum permutation. Case 2
/// entries are emitted only when 1 - 8 t1 t2 >= 0. The minimum over the list
/// is the minimal partial-transpose eigenvalue attainable on the orbit.
std::vector<CriticalPoint> critical_point_values(const Spectrum3& s);

/// Hilbert-Schmidt distance from the maximally mixed symmetric state,
/// r = sqrt(max(0, purity - 1/(2s+1))) with s = N/2.
double radius(const SymmetricDensityMatrix& rho);

/// Radius of the orbit-optimal state as a function of its spectrum:
/// r^2 = 2/3 + 2 (tau2^2 + tau3^2 + tau2 tau3 - tau2 - tau3).
double r_of_spectrum(const Spectrum3& s);

/// SAS boundary in (tau3, r) coordinates:
/// r = sqrt(2/3) [1 + 3 (tau3 - sqrt(tau3))], tau3 in [1/9, 1/3].
double sas_boundary_r(double tau3);

struct TwoQubitBallRadii {
  double r_sas;          // 1/(2 sqrt(6))
  double big_r_sas;      // 2/(3 sqrt(6))
  double r_lower_bound;  // 1/(2 sqrt(42)), general-s bound at s = 1
};

TwoQubitBallRadii ball_radii_2qubit();

}  // namespace symsep
