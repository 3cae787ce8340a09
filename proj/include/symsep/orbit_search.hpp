#pragma once

#include <cstdint>

#include "symsep/symmetric.hpp"

namespace symsep {

enum class Objective { Negativity, Concurrence };

struct OrbitSearchConfig {
  int n_haar_samples = 1000;
  int n_ascent_restarts = 20;
  double ascent_step_init = 0.3;
  double ascent_tolerance = 1e-7;
  int max_ascent_iters = 2000;
  std::uint64_t seed = 0;
};

struct OrbitSearchResult {
  double best_value;
  Matrix best_unitary;
  long n_evaluations;
  bool converged;
};

/// Objective value at one orbit point: the entanglement measure of the
/// embedded state U rho U^dag.
double orbit_objective(const SymmetricDensityMatrix& rho, Objective obj,
                       const Matrix& u);

/// Stochastic local ascent over the SU(N+1) orbit of a symmetric state:
/// Haar restarts followed by random-direction geodesic steps
/// U <- exp(i eps H) U with adaptive eps. The result is a lower bound on the
/// orbit maximum; deterministic under a fixed seed.
OrbitSearchResult orbit_maximize(const SymmetricDensityMatrix& rho,
                                 Objective obj, const OrbitSearchConfig& cfg);

/// Plain Haar-sampling baseline: max of the objective over n orbit points.
double orbit_sample_max(const SymmetricDensityMatrix& rho, Objective obj,
                        int n, Rng& rng);

}  // namespace symsep
