#pragma once

#include <vector>

#include "masaent/masa.hpp"
#include "masaent/matrix.hpp"
#include "masaent/stochastic.hpp"

namespace masaent {

// Eigenvalues below this count as zero for supports and logarithms.
inline constexpr double kSupportTol = 1e-12;

// eta(t) = -t ln t with eta(0) = 0; natural logarithm. Throws for t < 0.
double eta(double t);

/// Positive linear functional x -> Tr(Q x) on M_n(C), held by its density
/// matrix Q. Construction requires Q Hermitian within 1e-10 with smallest
/// eigenvalue >= -1e-12; the stored density is symmetrized.
class PositiveFunctional {
 public:
  explicit PositiveFunctional(CMatrix density);

  const CMatrix& density() const { return q_; }
  int dim() const { return static_cast<int>(q_.rows()); }
  double trace() const { return q_.trace().real(); }
  bool is_state(double tol = 1e-10) const;

  // Tr(Q x); the imaginary part is discarded (it vanishes for Hermitian x).
  double operator()(const CMatrix& x) const;

 private:
  CMatrix q_;
};

PositiveFunctional trace_state(int n);  // tau = Tr/n

/// Finite family (phi_i) of positive functionals summing to a given whole;
/// the sum is checked entrywise within 1e-10.
class Decomposition {
 public:
  Decomposition(std::vector<PositiveFunctional> parts, PositiveFunctional whole);

  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<PositiveFunctional>& parts() const { return parts_; }
  const PositiveFunctional& whole() const { return whole_; }

 private:
  std::vector<PositiveFunctional> parts_;
  PositiveFunctional whole_;
};

// S(psi) = Tr(eta(Q)); eigenvalues in [-1e-12, 0) are clipped.
double von_neumann_entropy(const PositiveFunctional& f);

// S(psi, phi) = Tr(Q_psi (log Q_psi - log Q_phi)), logarithms on supports;
// +infinity when psi's support is not dominated by phi's.
double relative_entropy(const PositiveFunctional& psi, const PositiveFunctional& phi);

// The weights (psi(p_1), ..., psi(p_n)) of the restriction to a, clipped of
// floating-point dust.
RVector restriction_weights(const PositiveFunctional& f, const Masa& a);

// S(psi|_a) = sum_j eta(psi(p_j)).
double restricted_entropy(const PositiveFunctional& f, const Masa& a);

// sum_i S(phi_i|_a, phi|_a) computed as -sum_i S(phi_i|_a) + S(phi|_a);
// the whole must be a state.
double decomposition_entropy_sum(const Decomposition& d, const Masa& a);

/// Decomposition of a state along its spectral projections: parts have
/// densities lambda_i v_i v_i*.
struct SpectralSplit {
  Decomposition decomposition;
  Masa eigenbasis;             // diagonalizes the density
  ProbabilityVector spectrum;  // non-increasing
};

SpectralSplit spectral_split(const PositiveFunctional& state);

// phi_v(x) = phi(v x v*), i.e. density v* Q v.
PositiveFunctional inner_perturbation(const PositiveFunctional& f, const Unitary& v);

// Haar-conjugated state with flat-Dirichlet spectrum.
PositiveFunctional random_state(int n, Rng& rng);

// Diagonal density with flat-Dirichlet weights.
PositiveFunctional random_diagonal_state(int n, Rng& rng);

// Splits phi into `parts` PSD pieces: random PSD matrices R_i are rescaled
// so their normalized sum is the identity, then compressed by sqrt(Q).
// Parts are generally not diagonal.
Decomposition random_decomposition(const PositiveFunctional& phi, int parts, Rng& rng);

}  // namespace masaent
