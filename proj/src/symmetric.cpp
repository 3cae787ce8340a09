#include "symsep/symmetric.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace symsep {

DickeBasis dicke_basis(int n_qubits) {
  if (n_qubits != 2 && n_qubits != 3) {
    throw std::invalid_argument("dicke_basis: n_qubits must be 2 or 3");
  }
  const int dim = 1 << n_qubits;
  Matrix vecs(dim, n_qubits + 1);
  for (int k = 0; k <= n_qubits; ++k) {
    int count = 0;
    for (int idx = 0; idx < dim; ++idx) {
      if (std::popcount(static_cast<unsigned>(idx)) == k) ++count;
    }
    const double coeff = 1.0 / std::sqrt(static_cast<double>(count));
    for (int idx = 0; idx < dim; ++idx) {
      if (std::popcount(static_cast<unsigned>(idx)) == k) vecs(idx, k) = coeff;
    }
  }
  return {n_qubits, vecs};
}

SymmetricDensityMatrix make_symmetric_density(int n_qubits, Matrix m) {
  if (n_qubits != 2 && n_qubits != 3) {
    throw std::invalid_argument("symmetric density: n_qubits must be 2 or 3");
  }
  if (m.rows() != n_qubits + 1 || m.cols() != n_qubits + 1) {
    throw std::invalid_argument("symmetric density: wrong dimension");
  }
  if (!is_hermitian(m)) {
    throw std::invalid_argument("symmetric density: not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > tols().trace_one ||
      std::abs(m.trace().imag()) > tols().trace_one) {
    throw std::invalid_argument("symmetric density: trace != 1");
  }
  const auto ev = eigvals_hermitian(m);
  if (ev.back() < tols().psd_floor) {
    throw std::invalid_argument("symmetric density: not positive semidefinite");
  }
  return {n_qubits, std::move(m)};
}

SymmetricDensityMatrix maximally_mixed_symmetric(int n_qubits) {
  const int d = n_qubits + 1;
  Matrix m = Matrix::identity(d);
  m *= Complex(1.0 / d);
  return {n_qubits, std::move(m)};
}

Matrix embed_full(const SymmetricDensityMatrix& rho) {
  const DickeBasis basis = dicke_basis(rho.n_qubits);
  return basis.vectors * rho.matrix * basis.vectors.adjoint();
}

Matrix partial_transpose(const Matrix& full, int cut) {
  const int dim = full.rows();
  if (full.cols() != dim || (dim != 4 && dim != 8)) {
    throw std::invalid_argument("partial_transpose: dimension must be 4 or 8");
  }
  const int n = (dim == 4) ? 2 : 3;
  if (cut < 0 || cut >= n) {
    throw std::invalid_argument("partial_transpose: invalid qubit index");
  }
  const int bit = 1 << (n - 1 - cut);  // qubit 0 = most significant bit
  Matrix pt(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      // Swap the cut qubit's bit between row and column index.
      const int ip = (i & ~bit) | (j & bit);
      const int jp = (j & ~bit) | (i & bit);
      pt(ip, jp) = full(i, j);
    }
  }
  return pt;
}

double purity(const SymmetricDensityMatrix& rho) {
  return (rho.matrix * rho.matrix).trace().real();
}

}  // namespace symsep
