#include "masaent/stochastic.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "masaent/functionals.hpp"

using namespace masaent;

namespace {

Unitary rotation_09() {
  const double c = std::sqrt(0.9);
  const double s = std::sqrt(0.1);
  CMatrix rot(2, 2);
  rot << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
  return Unitary(rot);
}

}  // namespace

TEST_CASE("unistochastic squares moduli") {
  CHECK(max_abs(unistochastic(Unitary(CMatrix::Identity(3, 3))).mat() - RMatrix::Identity(3, 3)) ==
        0.0);

  const BistochasticMatrix f2 = unistochastic(fourier_matrix(2));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(f2(i, j) == doctest::Approx(0.5).epsilon(1e-14));
  }

  const BistochasticMatrix rot = unistochastic(rotation_09());
  CHECK(rot(0, 0) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(rot(0, 1) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(rot(1, 0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(rot(1, 1) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("BistochasticMatrix validates") {
  RMatrix bad(2, 2);
  bad << 0.5, 0.5, 0.5, 0.4;
  CHECK_THROWS_AS(BistochasticMatrix{bad}, std::invalid_argument);

  RMatrix negative(2, 2);
  negative << 1.1, -0.1, -0.1, 1.1;
  CHECK_THROWS_AS(BistochasticMatrix{negative}, std::invalid_argument);

  RMatrix dusty(2, 2);
  dusty << 1.0 + 1e-13, -1e-13, -1e-13, 1.0 + 1e-13;
  const BistochasticMatrix clipped(dusty);
  CHECK(clipped(0, 1) == 0.0);
}

TEST_CASE("ProbabilityVector validates") {
  RVector good(2);
  good << 0.7, 0.3;
  CHECK_NOTHROW(ProbabilityVector{good});

  RVector off(2);
  off << 0.7, 0.4;
  CHECK_THROWS_AS(ProbabilityVector{off}, std::invalid_argument);

  RVector negative(2);
  negative << 1.5, -0.5;
  CHECK_THROWS_AS(ProbabilityVector{negative}, std::invalid_argument);
}

TEST_CASE("entropy of bistochastic matrices") {
  CHECK(entropy(unistochastic(permutation_unitary({1, 2, 0}))) == 0.0);

  const BistochasticMatrix flat(RMatrix::Constant(3, 3, 1.0 / 3.0));
  CHECK(entropy(flat) == doctest::Approx(std::log(3.0)).epsilon(1e-12));

  CHECK(entropy(unistochastic(rotation_09())) ==
        doctest::Approx(0.3250829733914482).epsilon(1e-12));
}

TEST_CASE("weighted_entropy weights columns") {
  const BistochasticMatrix rot = unistochastic(rotation_09());

  RVector uniform(2);
  uniform << 0.5, 0.5;
  CHECK(weighted_entropy(rot, ProbabilityVector(uniform)) ==
        doctest::Approx(entropy(rot)).epsilon(1e-12));

  RVector point(2);
  point << 1.0, 0.0;
  CHECK(weighted_entropy(rot, ProbabilityVector(point)) ==
        doctest::Approx(0.3250829733914482).epsilon(1e-12));

  RVector skew(2);
  skew << 0.7, 0.3;
  CHECK(weighted_entropy(unistochastic(permutation_unitary({1, 0})), ProbabilityVector(skew)) ==
        0.0);

  RVector three(3);
  three << 0.5, 0.3, 0.2;
  CHECK_THROWS_AS(weighted_entropy(rot, ProbabilityVector(three)), std::invalid_argument);
}

TEST_CASE("uniform weighting matches plain entropy on random unitaries") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BistochasticMatrix b = unistochastic(random_unitary(4, seed));
    RVector uniform = RVector::Constant(4, 0.25);
    CHECK(std::abs(weighted_entropy(b, ProbabilityVector(uniform)) - entropy(b)) < 1e-12);
  }
}

TEST_CASE("transpose preserves entropy and matches the adjoint's moduli") {
  const Unitary u = random_unitary(4, std::uint64_t{8});
  const BistochasticMatrix b = unistochastic(u);
  CHECK(entropy(transpose(b)) == doctest::Approx(entropy(b)).epsilon(1e-14));
  CHECK(max_abs(transpose(b).mat() - unistochastic(u.adjoint()).mat()) < 1e-15);
}
