#pragma once

#include <vector>

#include "masaent/matrix.hpp"

namespace masaent {

inline constexpr double kOrthogonalTol = 1e-9;

/// Maximal abelian subalgebra of M_n(C), represented by its n minimal
/// projections p_j = w e_j w* together with the diagonalizing unitary w.
class Masa {
 public:
  explicit Masa(Unitary diagonalizer);

  int dim() const { return w_.dim(); }
  const Unitary& diagonalizer() const { return w_; }
  const std::vector<CMatrix>& projections() const { return projections_; }
  const CMatrix& projection(int j) const;

 private:
  Unitary w_;
  std::vector<CMatrix> projections_;
};

// The diagonal matrices.
Masa diagonal_masa(int n);

// u a u*, obtained by diagonalizing with u w_a.
Masa conjugate_masa(const Masa& a, const Unitary& u);

Masa random_masa(int n, Rng& rng);

// Trace-preserving conditional expectation onto a:
// E_a(x) = sum_j n tau(x p_j) p_j with tau the normalized trace.
CMatrix conditional_expectation(const Masa& a, const CMatrix& x);

// A unitary with b = u a u*, chosen as w_b w_a* so that it carries a's j-th
// projection onto b's j-th. Unique only up to monomial factors on each side.
Unitary connecting_unitary(const Masa& a, const Masa& b);

// The connecting unitary written in a's matrix units: w_a* w_b.
Unitary connecting_unitary_in_basis(const Masa& a, const Masa& b);

// Popa orthogonality: every |(w_a* w_b)_{jk}|^2 equals 1/n within tol.
bool is_orthogonal_pair(const Masa& a, const Masa& b, double tol = kOrthogonalTol);

// E_a E_b = E_b E_a = tau(.)1, checked on all matrix units.
bool is_commuting_square(const Masa& a, const Masa& b, double tol = kOrthogonalTol);

// Equality as unordered sets of minimal projections.
bool same_masa(const Masa& a, const Masa& b, double tol = kOrthogonalTol);

}  // namespace masaent
