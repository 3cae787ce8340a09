#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace symsep {

using Complex = std::complex<double>;

/// Central tolerance knobs. All numeric contracts in the library refer to
/// these values; property tests read them from here as well.
struct Tolerances {
  double hermiticity = 1e-12;     // max entrywise |A - A^dag|
  double unitarity = 1e-10;       // max entrywise |U U^dag - I|
  double reconstruction = 1e-10;  // eigendecomposition round trip
  double trace_one = 1e-12;       // density matrix trace
  double psd_floor = -1e-12;      // smallest admissible eigenvalue
  double jacobi_offdiag = 1e-14;  // off-diagonal Frobenius norm at convergence
  double spectrum_renorm = 1e-9;  // max normalization correction on input spectra
  double boundary_slack = 1e-12;  // SAS boundary classification slack
};

const Tolerances& tols();

/// Small dense complex matrix, row-major. Dimensions are tiny (<= 8) so no
/// attempt is made at blocking or expression templates.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  Matrix adjoint() const;
  Matrix conjugate() const;
  Complex trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(Complex s);

 private:
  int rows_, cols_;
  std::vector<Complex> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);

Matrix kron(const Matrix& a, const Matrix& b);
Complex determinant(Matrix m);

double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_hermitian(const Matrix& m, double tol = tols().hermiticity);
bool is_unitary(const Matrix& m, double tol = tols().unitarity);

struct EigResult {
  std::vector<double> values;  // non-ascending
  Matrix vectors;              // columns, same order as values
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Throws
/// std::invalid_argument if the input is not Hermitian within tolerance.
EigResult eig_hermitian(const Matrix& m);

/// Eigenvalues only, same contract as eig_hermitian.
std::vector<double> eigvals_hermitian(const Matrix& m);

/// Deterministic RNG with stream splitting. The engine is mt19937_64
/// (bit-exact across platforms); substream seeds are derived with splitmix64.
/// Gaussian variates use an explicit Box-Muller transform rather than
/// std::normal_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent, reproducible substream: split(k) on equal-seeded parents
  /// yields identical streams.
  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random unitary in SU(dim), 2 <= dim <= 8. Ginibre sample, Gram-Schmidt
/// orthonormalization (positive-diagonal triangular factor), then a global
/// phase fixing det = 1.
Matrix haar_random_unitary(int dim, Rng& rng);

}  // namespace symsep
