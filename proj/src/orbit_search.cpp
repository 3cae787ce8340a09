#include "symsep/orbit_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "symsep/measures.hpp"

namespace symsep {

namespace {

/// Random traceless Hermitian ascent direction with Gaussian weights on an
/// orthogonal generator basis of su(d); realized as the traceless Hermitian
/// part of a Ginibre sample.
Matrix random_direction(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  Matrix h(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  const Complex tr = h.trace() / static_cast<double>(d);
  for (int i = 0; i < d; ++i) h(i, i) -= tr;
  return h;
}

/// exp(i eps H) for Hermitian H, via eigendecomposition.
Matrix geodesic_step(const Matrix& h, double eps) {
  const EigResult eig = eig_hermitian(h);
  const int d = h.rows();
  Matrix u(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k) {
        s += eig.vectors(i, k) * std::polar(1.0, eps * eig.values[k]) *
             std::conj(eig.vectors(j, k));
      }
      u(i, j) = s;
    }
  }
  return u;
}

/// Unclamped ascent score, strictly monotone in the objective where the
/// latter is positive and still informative on the separable plateau where
/// the clamped measures are flat at zero.
double ascent_score(const SymmetricDensityMatrix& rho, Objective obj,
                    const Matrix& u) {
  const SymmetricDensityMatrix moved{rho.n_qubits, u * rho.matrix * u.adjoint()};
  const Matrix full = embed_full(moved);
  switch (obj) {
    case Objective::Negativity:
      return -eigvals_hermitian(partial_transpose(full, 0)).back();
    case Objective::Concurrence: {
      // mu1 - mu2 - mu3 - mu4 without the final clamp.
      Matrix yy(4, 4);
      yy(0, 3) = -1.0;
      yy(1, 2) = 1.0;
      yy(2, 1) = 1.0;
      yy(3, 0) = -1.0;
      const EigResult eig = eig_hermitian(full);
      Matrix sqrt_rho(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          Complex s = 0.0;
          for (int k = 0; k < 4; ++k)
            s += eig.vectors(i, k) * std::sqrt(std::max(0.0, eig.values[k])) *
                 std::conj(eig.vectors(j, k));
          sqrt_rho(i, j) = s;
        }
      const Matrix flipped = yy * full.conjugate() * yy;
      auto mu2 = eigvals_hermitian(sqrt_rho * flipped * sqrt_rho);
      std::sort(mu2.begin(), mu2.end(), std::greater<double>());
      double c = 0.0;
      for (int k = 0; k < 4; ++k)
        c += (k == 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, mu2[k]));
      return c;
    }
  }
  return 0.0;
}

}  // namespace

double orbit_objective(const SymmetricDensityMatrix& rho, Objective obj,
                       const Matrix& u) {
  const SymmetricDensityMatrix moved{rho.n_qubits, u * rho.matrix * u.adjoint()};
  const Matrix full = embed_full(moved);
  switch (obj) {
    case Objective::Negativity: {
      const auto ev = eigvals_hermitian(partial_transpose(full, 0));
      return 2.0 * std::max(0.0, -ev.back());
    }
    case Objective::Concurrence:
      return concurrence(full);
  }
  return 0.0;
}

OrbitSearchResult orbit_maximize(const SymmetricDensityMatrix& rho,
                                 Objective obj, const OrbitSearchConfig& cfg) {
  if (obj == Objective::Concurrence && rho.n_qubits != 2) {
    throw std::invalid_argument("orbit_maximize: concurrence needs n_qubits = 2");
  }
  if (cfg.n_ascent_restarts < 1 || cfg.max_ascent_iters < 1 ||
      cfg.ascent_tolerance <= 0.0) {
    throw std::invalid_argument("orbit_maximize: bad config");
  }
  const int d = rho.n_qubits + 1;
  const Rng master(cfg.seed);

  OrbitSearchResult result{-1.0, Matrix::identity(d), 0, true};
  // The ascent climbs the unclamped score: the clamped measures are flat at
  // zero on the separable part of the orbit, which would starve the step
  // adaptation of signal exactly for near-boundary spectra.
  double best_score = 0.0;
  bool have_best = false;
  for (int restart = 0; restart < cfg.n_ascent_restarts; ++restart) {
    Rng rng = master.split(restart);
    Matrix u = haar_random_unitary(d, rng);
    double val = ascent_score(rho, obj, u);
    ++result.n_evaluations;

    double step = cfg.ascent_step_init;
    int iter = 0;
    for (; iter < cfg.max_ascent_iters && step > cfg.ascent_tolerance; ++iter) {
      // Try the sampled direction in both senses before shrinking: near a
      // ridge one of the two signs follows the gradient for any direction
      // with a nonzero gradient component.
      const Matrix h = random_direction(d, rng);
      bool improved = false;
      for (double sign : {1.0, -1.0}) {
        const Matrix u_new = geodesic_step(h, sign * step) * u;
        const double v_new = ascent_score(rho, obj, u_new);
        ++result.n_evaluations;
        if (v_new > val) {
          val = v_new;
          u = u_new;
          improved = true;
          break;
        }
      }
      step *= improved ? 1.5 : 0.5;
    }
    if (step > cfg.ascent_tolerance) result.converged = false;

    if (!have_best || val > best_score) {
      best_score = val;
      result.best_unitary = u;
      have_best = true;
    }
  }
  result.best_value = orbit_objective(rho, obj, result.best_unitary);
  ++result.n_evaluations;
  return result;
}

double orbit_sample_max(const SymmetricDensityMatrix& rho, Objective obj,
                        int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("orbit_sample_max: n must be >= 1");
  if (obj == Objective::Concurrence && rho.n_qubits != 2) {
    throw std::invalid_argument("orbit_sample_max: concurrence needs n_qubits = 2");
  }
  const int d = rho.n_qubits + 1;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const Matrix u = haar_random_unitary(d, rng);
    best = std::max(best, orbit_objective(rho, obj, u));
  }
  return best;
}

}  // namespace symsep
