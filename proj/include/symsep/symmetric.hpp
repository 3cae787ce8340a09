#pragma once

#include "symsep/linalg.hpp"

namespace symsep {

/// Orthonormal Dicke states |D_N^(k)>, k = 0..N, as columns of a 2^N x (N+1)
/// matrix of computational-basis coefficients. k counts qubits in |->, and
/// qubit 0 is the most significant bit of the product-basis index.
struct DickeBasis {
  int n_qubits;
  Matrix vectors;
};

DickeBasis dicke_basis(int n_qubits);  // n_qubits in {2, 3}

/// Density matrix of a fully symmetric N-qubit state, stored in the Dicke
/// basis (dimension N+1). Hermitian, unit trace, PSD within tolerance.
struct SymmetricDensityMatrix {
  int n_qubits;
  Matrix matrix;
};

/// Validating constructor; throws std::invalid_argument on bad input.
SymmetricDensityMatrix make_symmetric_density(int n_qubits, Matrix m);

SymmetricDensityMatrix maximally_mixed_symmetric(int n_qubits);

/// Embedding into the full 2^N-dimensional space:
/// sum_jk rho[j][k] |D_N^(j)><D_N^(k)|.
Matrix embed_full(const SymmetricDensityMatrix& rho);

/// Partial transpose over the single qubit `cut`. Valid for dim 4 (N=2) and
/// dim 8 (N=3).
Matrix partial_transpose(const Matrix& full, int cut = 0);

double purity(const SymmetricDensityMatrix& rho);

}  // namespace symsep
