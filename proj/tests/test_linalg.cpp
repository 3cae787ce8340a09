#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "symsep/linalg.hpp"

using namespace symsep;

namespace {

Matrix random_hermitian(int d, Rng& rng) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    m(i, i) = rng.gaussian();
    for (int j = i + 1; j < d; ++j) {
      m(i, j) = Complex(rng.gaussian(), rng.gaussian());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("eig of identity") {
  const auto eig = eig_hermitian(Matrix::identity(3));
  for (double v : eig.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig of a diagonal matrix is its diagonal, sorted") {
  Matrix m(3, 3);
  m(0, 0) = 0.2;
  m(1, 1) = 0.5;
  m(2, 2) = 0.3;
  const auto ev = eigvals_hermitian(m);
  CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(ev[2] == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("symmetrized |+-> partial transpose by hand: min eigenvalue -1/2") {
  // rho = |psi><psi| with psi = (0, 1, 1, 0)/sqrt(2); transpose the first
  // qubit's 2x2 blocks by hand and diagonalize.
  Matrix rho(4, 4);
  rho(1, 1) = rho(1, 2) = rho(2, 1) = rho(2, 2) = 0.5;
  Matrix pt(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int ip = (i & 1) | (j & 2);
      const int jp = (j & 1) | (i & 2);
      pt(ip, jp) = rho(i, j);
    }
  }
  const auto ev = eigvals_hermitian(pt);
  CHECK(ev.back() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("eigenvalue sum equals trace; reconstruction and orthonormality") {
  Rng rng(7);
  for (int d : {2, 3, 4, 8}) {
    for (int rep = 0; rep < 20; ++rep) {
      const Matrix m = random_hermitian(d, rng);
      const EigResult eig = eig_hermitian(m);

      double sum = 0.0;
      for (double v : eig.values) sum += v;
      CHECK(std::abs(sum - m.trace().real()) < 1e-10);

      Matrix rec(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Complex s = 0.0;
          for (int k = 0; k < d; ++k)
            s += eig.vectors(i, k) * eig.values[k] * std::conj(eig.vectors(j, k));
          rec(i, j) = s;
        }
      CHECK(max_abs_diff(rec, m) < tols().reconstruction);
      CHECK(is_unitary(eig.vectors));
    }
  }
}

TEST_CASE("eig recovers a planted sorted spectrum") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix v = haar_random_unitary(4, rng);
    std::vector<double> lam = {1.9, 0.7, -0.2, -1.1};
    Matrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Complex s = 0.0;
        for (int k = 0; k < 4; ++k)
          s += v(i, k) * lam[k] * std::conj(v(j, k));
        m(i, j) = s;
      }
    const auto ev = eigvals_hermitian(m);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(ev[k] - lam[k]) < 1e-10);
  }
}

TEST_CASE("haar sampler determinism") {
  Rng a(42), b(42);
  const Matrix u1 = haar_random_unitary(3, a);
  const Matrix u2 = haar_random_unitary(3, b);
  CHECK(max_abs_diff(u1, u2) == 0.0);
}

TEST_CASE("haar samples are special unitary for many seeds") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const int d = 3 + static_cast<int>(seed % 2);
    const Matrix u = haar_random_unitary(d, rng);
    CHECK(is_unitary(u));
    const Complex det = determinant(u);
    CHECK(std::abs(det - Complex(1.0)) < 1e-8);
  }
}

TEST_CASE("haar first-moment: mean |U00|^2 = 1/d") {
  Rng rng(123);
  double acc = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const Matrix u = haar_random_unitary(3, rng);
    acc += std::norm(u(0, 0));
  }
  CHECK(std::abs(acc / n - 1.0 / 3.0) < 0.02);
}

TEST_CASE("rng stream splitting is reproducible and streams differ") {
  Rng a(5), b(5);
  Rng s1 = a.split(3);
  Rng s2 = b.split(3);
  Rng s3 = a.split(4);
  CHECK(s1.next_u64() == s2.next_u64());
  CHECK(a.split(3).next_u64() != s3.next_u64());
}

TEST_CASE("determinant of a known matrix") {
  Matrix m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = Complex(0.0, 1.0);
  m(1, 0) = Complex(0.0, -1.0);
  m(1, 1) = 3.0;
  CHECK(std::abs(determinant(m) - Complex(5.0)) < 1e-14);
}

TEST_CASE("kron dimensions and values") {
  Matrix a = Matrix::identity(2);
  Matrix b(2, 2);
  b(0, 1) = 1.0;
  b(1, 0) = 1.0;
  const Matrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(std::abs(k(0, 1) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(k(2, 3) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(k(0, 3)) < 1e-15);
}
