#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "masaent/rng.hpp"

namespace masaent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;

// Largest entry magnitude; 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const CMatrix& m, double tol = kUnitaryTol);

/// Square matrix validated at construction: finite entries and
/// max |(u u* - 1)_{ij}| <= tol.
class Unitary {
 public:
  explicit Unitary(CMatrix u, double tol = kUnitaryTol);

  const CMatrix& mat() const { return u_; }
  int dim() const { return static_cast<int>(u_.rows()); }
  Unitary adjoint() const;

 private:
  CMatrix u_;
};

struct HermitianEigen {
  RVector values;  // non-increasing
  Unitary basis;   // column j is the eigenvector for values[j]
};

// Throws if h is not square and Hermitian within kHermitianTol. The
// reconstruction basis * diag(values) * basis^* matches h to ~1e-14.
HermitianEigen hermitian_eigendecomposition(const CMatrix& h);

// Entries exp(2*pi*i*j*k/n)/sqrt(n).
Unitary fourier_matrix(int n);

// Haar-distributed: complex Gaussian matrix, QR, phases of R's diagonal
// folded into Q so the factorization is unique.
Unitary random_unitary(int n, Rng& rng);
Unitary random_unitary(int n, std::uint64_t seed);

// perm must be a permutation of {0,...,n-1}; column j carries a single 1 in
// row perm[j].
Unitary permutation_unitary(const std::vector<int>& perm);

std::vector<int> random_permutation(int n, Rng& rng);

}  // namespace masaent
