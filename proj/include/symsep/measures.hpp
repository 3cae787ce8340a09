#pragma once

#include "symsep/linalg.hpp"

namespace symsep {

/// Negativity via the minimal partial-transpose eigenvalue:
/// N = 2 max(0, -lambda_min).
struct PTResult {
  double lambda_min;
  double negativity;
};

/// Negativity of a density matrix in the full 4- or 8-dimensional space.
/// The transposed subsystem is qubit 0; for symmetric states the spectrum of
/// the partial transpose does not depend on this choice.
PTResult negativity(const Matrix& full);

/// Standard two-qubit spin-flip concurrence, max(0, mu1 - mu2 - mu3 - mu4).
/// Conjugation is taken in the computational product basis.
double concurrence(const Matrix& full);

}  // namespace symsep
