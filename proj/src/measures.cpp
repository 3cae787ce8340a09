#include "symsep/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symsep/symmetric.hpp"

namespace symsep {

namespace {

void check_density(const Matrix& full) {
  if (full.rows() != full.cols()) {
    throw std::invalid_argument("not a square matrix");
  }
  if (!is_hermitian(full, 1e-10)) {
    throw std::invalid_argument("density matrix not Hermitian");
  }
  if (std::abs(full.trace().real() - 1.0) > 1e-10) {
    throw std::invalid_argument("density matrix trace != 1");
  }
  const auto ev = eigvals_hermitian(full);
  if (ev.back() < -1e-9) {
    throw std::invalid_argument("density matrix not positive semidefinite");
  }
}

}  // namespace

PTResult negativity(const Matrix& full) {
  const int dim = full.rows();
  if (dim != 4 && dim != 8) {
    throw std::invalid_argument("negativity: dimension must be 4 or 8");
  }
  check_density(full);
  const auto ev = eigvals_hermitian(partial_transpose(full, 0));
  const double lmin = ev.back();
  return {lmin, 2.0 * std::max(0.0, -lmin)};
}

double concurrence(const Matrix& full) {
  if (full.rows() != 4 || full.cols() != 4) {
    throw std::invalid_argument("concurrence: dimension must be 4");
  }
  check_density(full);

  // Y (x) Y in the computational basis; real antidiagonal.
  Matrix yy(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  const Matrix flipped = yy * full.conjugate() * yy;

  // Eigenvalues of rho * flipped through the Hermitian form
  // sqrt(rho) * flipped * sqrt(rho), which shares its spectrum.
  const EigResult eig = eig_hermitian(full);
  Matrix sqrt_rho(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double lam = std::max(0.0, eig.values[k]);
        s += eig.vectors(i, k) * std::sqrt(lam) * std::conj(eig.vectors(j, k));
      }
      sqrt_rho(i, j) = s;
    }
  }
  const auto mu2 = eigvals_hermitian(sqrt_rho * flipped * sqrt_rho);
  double c = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double mu = std::sqrt(std::max(0.0, mu2[k]));
    c += (k == 0) ? mu : -mu;
  }
  return std::max(0.0, c);
}

}  // namespace symsep
