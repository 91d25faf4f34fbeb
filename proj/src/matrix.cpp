#include "masaent/matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace masaent {

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) return false;
  if (!m.allFinite()) return false;
  const CMatrix gram = m * m.adjoint();
  return max_abs(gram - CMatrix::Identity(m.rows(), m.cols())) <= tol;
}

Unitary::Unitary(CMatrix u, double tol) : u_(std::move(u)) {
  if (!is_unitary(u_, tol)) {
    throw std::invalid_argument("Unitary: matrix is not unitary within tolerance");
  }
}

Unitary Unitary::adjoint() const { return Unitary(u_.adjoint()); }

HermitianEigen hermitian_eigendecomposition(const CMatrix& h) {
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw std::invalid_argument("hermitian_eigendecomposition: matrix must be square");
  }
  if (!h.allFinite() || max_abs(h - h.adjoint()) > kHermitianTol) {
    throw std::invalid_argument("hermitian_eigendecomposition: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((h + h.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success) {
    throw std::invalid_argument("hermitian_eigendecomposition: eigensolver failed");
  }
  // Eigen returns ascending order; flip to non-increasing.
  return HermitianEigen{solver.eigenvalues().reverse(),
                        Unitary(solver.eigenvectors().rowwise().reverse())};
}

Unitary fourier_matrix(int n) {
  if (n <= 0) throw std::invalid_argument("fourier_matrix: dimension must be positive");
  CMatrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // Reduce jk mod n before forming the angle to keep the phase exact-ish.
      const long long r = (static_cast<long long>(j) * k) % n;
      f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(r) / n);
    }
  }
  return Unitary(std::move(f));
}

Unitary random_unitary(int n, Rng& rng) {
  if (n <= 0) throw std::invalid_argument("random_unitary: dimension must be positive");
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return Unitary(std::move(q));
}

Unitary random_unitary(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

Unitary permutation_unitary(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n == 0) throw std::invalid_argument("permutation_unitary: empty permutation");
  std::vector<bool> seen(n, false);
  for (const int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw std::invalid_argument("permutation_unitary: not a permutation of 0..n-1");
    }
    seen[p] = true;
  }
  CMatrix u = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) u(perm[j], j) = 1.0;
  return Unitary(std::move(u));
}

std::vector<int> random_permutation(int n, Rng& rng) {
  if (n <= 0) throw std::invalid_argument("random_permutation: dimension must be positive");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  }
  return perm;
}

}  // namespace masaent
