#include "masaent/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace masaent;

TEST_CASE("is_unitary accepts the identity and rejects scalings") {
  CHECK(is_unitary(CMatrix::Identity(3, 3), 1e-10));
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  CHECK_FALSE(is_unitary(d, 1e-10));
  CHECK_FALSE(is_unitary(CMatrix::Zero(2, 3), 1e-10));
}

TEST_CASE("Unitary construction validates") {
  CHECK_NOTHROW(Unitary(CMatrix::Identity(4, 4)));
  CHECK_THROWS_AS(Unitary(2.0 * CMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("hermitian_eigendecomposition sorts descending and reconstructs") {
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  const HermitianEigen eig = hermitian_eigendecomposition(d);
  CHECK(eig.values(0) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(eig.values(1) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(max_abs(eig.basis.mat() * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                    eig.basis.mat().adjoint() -
                d) < 1e-12);

  CMatrix half(2, 2);
  half << 0.5, 0.5, 0.5, 0.5;
  const HermitianEigen rank1 = hermitian_eigendecomposition(half);
  CHECK(rank1.values(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(rank1.values(1)) < 1e-14);
}

TEST_CASE("hermitian_eigendecomposition rejects non-Hermitian input") {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(hermitian_eigendecomposition(m), std::invalid_argument);
}

TEST_CASE("hermitian_eigendecomposition handles random Hermitian matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    CMatrix g(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
    const CMatrix h = (g + g.adjoint()) / 2.0;
    const HermitianEigen eig = hermitian_eigendecomposition(h);
    for (int i = 0; i + 1 < 5; ++i) CHECK(eig.values(i) >= eig.values(i + 1));
    CHECK(max_abs(eig.basis.mat() * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                      eig.basis.mat().adjoint() -
                  h) < 1e-9);
  }
}

TEST_CASE("fourier_matrix matches the small closed forms") {
  CHECK(fourier_matrix(1).mat()(0, 0) == Complex(1.0, 0.0));

  const CMatrix f2 = fourier_matrix(2).mat();
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - Complex(r, 0)) < 1e-15);
  CHECK(std::abs(f2(0, 1) - Complex(r, 0)) < 1e-15);
  CHECK(std::abs(f2(1, 0) - Complex(r, 0)) < 1e-15);
  CHECK(std::abs(f2(1, 1) - Complex(-r, 0)) < 1e-15);

  const CMatrix f3 = fourier_matrix(3).mat();
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) CHECK(std::abs(std::norm(f3(j, k)) - 1.0 / 3.0) < 1e-12);
  }
  CHECK(is_unitary(fourier_matrix(4).mat(), 1e-10));
  CHECK_THROWS_AS(fourier_matrix(0), std::invalid_argument);
}

TEST_CASE("random_unitary is deterministic and unitary") {
  const Unitary a = random_unitary(3, std::uint64_t{42});
  const Unitary b = random_unitary(3, std::uint64_t{42});
  CHECK(max_abs(a.mat() - b.mat()) == 0.0);
  CHECK(is_unitary(random_unitary(4, std::uint64_t{1}).mat(), 1e-10));

  const CMatrix u = random_unitary(2, std::uint64_t{7}).mat();
  for (int i = 0; i < 2; ++i) {
    double row = 0.0;
    for (int j = 0; j < 2; ++j) row += std::norm(u(i, j));
    CHECK(std::abs(row - 1.0) < 1e-12);
  }
}

TEST_CASE("permutation_unitary places ones by column") {
  CHECK(max_abs(permutation_unitary({0, 1, 2}).mat() - CMatrix::Identity(3, 3)) == 0.0);

  const CMatrix swap = permutation_unitary({1, 0}).mat();
  CHECK(swap(1, 0) == Complex(1.0, 0.0));
  CHECK(swap(0, 1) == Complex(1.0, 0.0));
  CHECK(swap(0, 0) == Complex(0.0, 0.0));

  CHECK_THROWS_AS(permutation_unitary({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(permutation_unitary({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permutation_unitary({}), std::invalid_argument);
}

TEST_CASE("random_permutation is a bijection") {
  Rng rng(5);
  const std::vector<int> perm = random_permutation(6, rng);
  std::vector<bool> seen(6, false);
  for (const int p : perm) {
    REQUIRE(p >= 0);
    REQUIRE(p < 6);
    CHECK_FALSE(seen[p]);
    seen[p] = true;
  }
}
