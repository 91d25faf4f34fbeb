#include "masaent/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"

using namespace masaent;

namespace {

PositiveFunctional diag_state(std::initializer_list<double> weights) {
  const int n = static_cast<int>(weights.size());
  CMatrix q = CMatrix::Zero(n, n);
  int k = 0;
  for (const double w : weights) q(k, k) = w, ++k;
  return PositiveFunctional(std::move(q));
}

}  // namespace

TEST_CASE("eta") {
  CHECK(eta(0.0) == 0.0);
  CHECK(eta(1.0) == 0.0);
  CHECK(eta(0.5) == doctest::Approx(0.34657359027997264).epsilon(1e-15));
  CHECK(eta(1.5) < 0.0);
  CHECK_THROWS_AS(eta(-1e-9), std::invalid_argument);
}

TEST_CASE("PositiveFunctional validates its density") {
  CHECK_THROWS_AS(PositiveFunctional(CMatrix::Identity(2, 3)), std::invalid_argument);

  CMatrix skew(2, 2);
  skew << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
  CHECK_THROWS_AS(PositiveFunctional{skew}, std::invalid_argument);

  CMatrix negative = CMatrix::Identity(2, 2);
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(PositiveFunctional{negative}, std::invalid_argument);

  CHECK(diag_state({0.7, 0.3}).is_state());
  CHECK_FALSE(diag_state({0.7, 0.7}).is_state());
  CHECK(trace_state(4).is_state());
}

TEST_CASE("functional evaluation is Tr(Qx)") {
  const PositiveFunctional phi = diag_state({0.7, 0.3});
  CMatrix e11 = CMatrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  CHECK(phi(e11) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(phi(CMatrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("von_neumann_entropy on the frozen cases") {
  CHECK(von_neumann_entropy(diag_state({1.0, 0.0})) == 0.0);
  CHECK(von_neumann_entropy(trace_state(2)) ==
        doctest::Approx(0.6931471805599453).epsilon(1e-14));
  CHECK(von_neumann_entropy(diag_state({0.7, 0.3})) ==
        doctest::Approx(0.6108643020548935).epsilon(1e-14));
}

TEST_CASE("relative_entropy basics") {
  const PositiveFunctional psi = diag_state({0.5, 0.5});
  const PositiveFunctional phi = diag_state({0.7, 0.3});
  CHECK(relative_entropy(psi, psi) == doctest::Approx(0.0).epsilon(1e-14));
  // 0.5 ln(0.5/0.7) + 0.5 ln(0.5/0.3)
  CHECK(relative_entropy(psi, phi) == doctest::Approx(0.08717669357238891).epsilon(1e-13));
  CHECK(std::isinf(relative_entropy(diag_state({1.0, 0.0}), diag_state({0.0, 1.0}))));
  CHECK(relative_entropy(diag_state({1.0, 0.0}), diag_state({1.0, 0.0})) ==
        doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("relative_entropy is nonnegative and unitarily invariant for states") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const PositiveFunctional psi = random_state(3, rng);
    const PositiveFunctional phi = random_state(3, rng);
    const double value = relative_entropy(psi, phi);
    CHECK(value > -1e-12);

    const Unitary v = random_unitary(3, rng);
    CHECK(relative_entropy(inner_perturbation(psi, v), inner_perturbation(phi, v)) ==
          doctest::Approx(value).epsilon(1e-9));
  }
  const PositiveFunctional same = random_state(3, rng);
  CHECK(relative_entropy(same, same) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("restricted_entropy on the frozen cases") {
  CHECK(restricted_entropy(trace_state(4), diagonal_masa(4)) ==
        doctest::Approx(1.3862943611198906).epsilon(1e-14));
  CHECK(restricted_entropy(diag_state({1.0, 0.0}), diagonal_masa(2)) == 0.0);

  const Masa fourier = conjugate_masa(diagonal_masa(2), fourier_matrix(2));
  CHECK(restricted_entropy(diag_state({1.0, 0.0}), fourier) ==
        doctest::Approx(0.6931471805599453).epsilon(1e-13));
}

TEST_CASE("restriction weights never exceed ln n and dominate the entropy") {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const PositiveFunctional phi = random_state(4, rng);
    const Masa a = random_masa(4, rng);
    const double restricted = restricted_entropy(phi, a);
    CHECK(restricted <= std::log(4.0) + 1e-12);
    CHECK(von_neumann_entropy(phi) <= restricted + 1e-10);
  }
}

TEST_CASE("decomposition_entropy_sum on hand-checkable splits") {
  const PositiveFunctional whole = trace_state(2);
  // Splitting the trace state along the diagonal: each part contributes
  // eta(1/2), the whole contributes ln 2, and the sum cancels to zero.
  const Decomposition split({diag_state({0.5, 0.0}), diag_state({0.0, 0.5})}, whole);
  CHECK(decomposition_entropy_sum(split, diagonal_masa(2)) == doctest::Approx(0.0).epsilon(1e-14));

  const Decomposition single({whole}, whole);
  CHECK(decomposition_entropy_sum(single, diagonal_masa(2)) == 0.0);

  CHECK_THROWS_AS(Decomposition({diag_state({0.5, 0.0})}, whole), std::invalid_argument);
}

TEST_CASE("spectral_split reassembles the state") {
  const SpectralSplit split = spectral_split(diag_state({0.7, 0.3}));
  CHECK(split.spectrum[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(split.spectrum[1] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(split.decomposition.size() == 2);

  Rng rng(31);
  const PositiveFunctional phi = random_state(4, rng);
  const SpectralSplit general = spectral_split(phi);
  CMatrix sum = CMatrix::Zero(4, 4);
  for (const auto& part : general.decomposition.parts()) sum += part.density();
  CHECK(max_abs(sum - phi.density()) < 1e-9);
  for (int i = 0; i + 1 < 4; ++i) CHECK(general.spectrum[i] >= general.spectrum[i + 1]);

  CHECK_NOTHROW(spectral_split(trace_state(3)));
  CHECK_THROWS_AS(spectral_split(PositiveFunctional(2.0 * CMatrix::Identity(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("inner_perturbation conjugates the density") {
  const PositiveFunctional phi = diag_state({0.7, 0.3});
  CHECK(max_abs(inner_perturbation(phi, Unitary(CMatrix::Identity(2, 2))).density() -
                phi.density()) == 0.0);

  Rng rng(37);
  const Unitary v = random_unitary(3, rng);
  const PositiveFunctional rotated(v.mat() * trace_state(3).density() * v.mat().adjoint());
  CHECK(max_abs(inner_perturbation(rotated, v).density() - trace_state(3).density()) < 1e-12);

  const PositiveFunctional psi = random_state(3, rng);
  CHECK(von_neumann_entropy(inner_perturbation(psi, v)) ==
        doctest::Approx(von_neumann_entropy(psi)).epsilon(1e-10));
}

TEST_CASE("random_decomposition produces valid decompositions") {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const PositiveFunctional phi = random_state(3, rng);
    CHECK_NOTHROW(random_decomposition(phi, 2 + trial % 3, rng));
  }
}

TEST_CASE("Lemma-style identity between the two evaluation routes") {
  Rng rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const PositiveFunctional phi = random_state(3, rng);
    const Masa a = random_masa(3, rng);
    const Decomposition d = random_decomposition(phi, 3, rng);

    const RVector whole_w = restriction_weights(phi, a);
    CMatrix whole_q = CMatrix::Zero(3, 3);
    for (int j = 0; j < 3; ++j) whole_q(j, j) = whole_w(j);
    const PositiveFunctional whole_restricted(whole_q);

    double direct = 0.0;
    for (const auto& part : d.parts()) {
      const RVector w = restriction_weights(part, a);
      CMatrix q = CMatrix::Zero(3, 3);
      for (int j = 0; j < 3; ++j) q(j, j) = w(j);
      direct += relative_entropy(PositiveFunctional(q), whole_restricted);
    }
    CHECK(std::abs(direct - decomposition_entropy_sum(d, a)) < 1e-10);
  }
}
