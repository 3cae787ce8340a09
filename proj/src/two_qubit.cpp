#include "symsep/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symsep {

namespace {

template <std::size_t N>
std::array<double, N> sorted_normalized(std::array<double, N> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  if (v.back() < -tols().spectrum_renorm) {
    throw std::invalid_argument("spectrum: negative entry");
  }
  for (auto& x : v) x = std::max(0.0, x);
  double sum = 0.0;
  for (double x : v) sum += x;
  if (std::abs(sum - 1.0) > tols().spectrum_renorm) {
    throw std::invalid_argument("spectrum: normalization correction too large");
  }
  for (auto& x : v) x /= sum;
  return v;
}

}  // namespace

Spectrum3::Spectrum3(double a, double b, double c)
    : t_(sorted_normalized(std::array{a, b, c})) {}

Spectrum4::Spectrum4(double a, double b, double c, double d)
    : l_(sorted_normalized(std::array{a, b, c, d})) {}

double max_negativity_su4(const Spectrum4& s) {
  const auto& l = s.values();
  const double root = std::hypot(l[0] - l[2], l[1] - l[3]);
  return std::max(0.0, root - l[1] - l[3]);
}

bool is_as_su4(const Spectrum4& s) {
  const auto& l = s.values();
  const double d13 = l[0] - l[2];
  return d13 * d13 - 4.0 * l[1] * l[3] <= 0.0;
}

bool johnston_as(const std::vector<double>& spectrum, int m) {
  if (m < 2 || spectrum.size() != static_cast<std::size_t>(2 * m)) {
    throw std::invalid_argument("johnston_as: spectrum length must be 2m, m >= 2");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i > 0 && spectrum[i] > spectrum[i - 1] + 1e-12) {
      throw std::invalid_argument("johnston_as: spectrum not sorted");
    }
    sum += spectrum[i];
  }
  if (std::abs(sum - 1.0) > tols().spectrum_renorm) {
    throw std::invalid_argument("johnston_as: spectrum not normalized");
  }
  const std::size_t n = spectrum.size();
  return spectrum[0] <=
         spectrum[n - 2] + 2.0 * std::sqrt(spectrum[n - 3] * spectrum[n - 1]);
}

double max_negativity_su3(const Spectrum3& s) {
  const double root = std::hypot(s.tau1(), s.tau2() - s.tau3());
  return std::max(0.0, root - s.tau2() - s.tau3());
}

SymmetricDensityMatrix optimal_state(const Spectrum3& s) {
  Matrix m(3, 3);
  m(0, 0) = s.tau3();  // weight on |D_2^(0)>
  m(1, 1) = s.tau1();  // weight on |D_2^(1)>
  m(2, 2) = s.tau2();  // weight on |D_2^(2)>
  return make_symmetric_density(2, std::move(m));
}

double max_concurrence_su3(const Spectrum3& s) {
  return std::max(0.0, s.tau1() - 2.0 * std::sqrt(s.tau2() * s.tau3()));
}

bool is_sas(const Spectrum3& s) {
  return std::sqrt(s.tau2()) + std::sqrt(s.tau3()) >= 1.0 - tols().boundary_slack;
}

std::vector<CriticalPoint> critical_point_values(const Spectrum3& s) {
  static constexpr std::array<std::array<int, 3>, 6> kPerms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto& tau = s.values();
  std::vector<CriticalPoint> out;
  out.reserve(30);
  for (const auto& perm : kPerms) {
    const double t1 = tau[perm[0]];
    const double t2 = tau[perm[1]];
    const double t3 = tau[perm[2]];
    const double root = std::hypot(t1, t2 - t3);

    if (t2 >= t3) {
      const double z = (root > 0.0) ? -t1 / root : 0.0;
      out.push_back({CriticalCase::Case1MinusRoot, perm,
                     0.5 * (t2 + t3 - root), {z, 0.0}});
    }
    if (t2 <= t3) {
      const double z = (root > 0.0) ? t1 / root : 0.0;
      out.push_back({CriticalCase::Case1PlusRoot, perm,
                     0.5 * (t2 + t3 + root), {z, 0.0}});
    }
    out.push_back({CriticalCase::Case1AlphaPi2, perm, 0.5 * (t2 + t3 - t1), {}});
    out.push_back({CriticalCase::Case1Central, perm, 0.5, {}});

    const double disc = 1.0 - 8.0 * t1 * t2;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      if (t1 >= t2) {
        const double y1 = (sq > 0.0) ? (t1 + t2 - t3) / sq : 0.0;
        const double y2 = (sq > 0.0) ? -t3 / sq : 0.0;
        out.push_back({CriticalCase::Case2MinusRoot, perm,
                       0.25 * (1.0 - sq), {y1, y2}});
      }
      if (t1 <= t2) {
        const double y1 = (sq > 0.0) ? (t3 - t1 - t2) / sq : 0.0;
        const double y2 = (sq > 0.0) ? t3 / sq : 0.0;
        out.push_back({CriticalCase::Case2PlusRoot, perm,
                       0.25 * (1.0 + sq), {y1, y2}});
      }
    }
  }
  return out;
}

double radius(const SymmetricDensityMatrix& rho) {
  const double d = rho.n_qubits + 1;  // 2s + 1
  return std::sqrt(std::max(0.0, purity(rho) - 1.0 / d));
}

double r_of_spectrum(const Spectrum3& s) {
  const double t2 = s.tau2();
  const double t3 = s.tau3();
  const double r2 = 2.0 / 3.0 + 2.0 * (t2 * t2 + t3 * t3 + t2 * t3 - t2 - t3);
  return std::sqrt(std::max(0.0, r2));
}

double sas_boundary_r(double tau3) {
  if (tau3 < 1.0 / 9.0 - 1e-12 || tau3 > 1.0 / 3.0 + 1e-12) {
    throw std::domain_error("sas_boundary_r: tau3 must lie in [1/9, 1/3]");
  }
  return std::sqrt(2.0 / 3.0) * (1.0 + 3.0 * (tau3 - std::sqrt(tau3)));
}

TwoQubitBallRadii ball_radii_2qubit() {
  return {1.0 / (2.0 * std::sqrt(6.0)),
          2.0 / (3.0 * std::sqrt(6.0)),
          1.0 / (2.0 * std::sqrt(42.0))};
}

}  // namespace symsep
