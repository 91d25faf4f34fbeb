#include "masaent/masa.hpp"

#include <stdexcept>
#include <utility>

namespace masaent {

Masa::Masa(Unitary diagonalizer) : w_(std::move(diagonalizer)) {
  const int n = w_.dim();
  projections_.reserve(n);
  for (int j = 0; j < n; ++j) {
    projections_.push_back(w_.mat().col(j) * w_.mat().col(j).adjoint());
  }
}

const CMatrix& Masa::projection(int j) const {
  if (j < 0 || j >= dim()) throw std::invalid_argument("Masa: projection index out of range");
  return projections_[static_cast<std::size_t>(j)];
}

Masa diagonal_masa(int n) {
  if (n <= 0) throw std::invalid_argument("diagonal_masa: dimension must be positive");
  return Masa(Unitary(CMatrix::Identity(n, n)));
}

Masa conjugate_masa(const Masa& a, const Unitary& u) {
  if (u.dim() != a.dim()) throw std::invalid_argument("conjugate_masa: dimension mismatch");
  return Masa(Unitary(u.mat() * a.diagonalizer().mat()));
}

Masa random_masa(int n, Rng& rng) { return Masa(random_unitary(n, rng)); }

CMatrix conditional_expectation(const Masa& a, const CMatrix& x) {
  const int n = a.dim();
  if (x.rows() != n || x.cols() != n) {
    throw std::invalid_argument("conditional_expectation: dimension mismatch");
  }
  // sum_j n tau(x p_j) p_j == w diag(diag(w* x w)) w*.
  const CMatrix& w = a.diagonalizer().mat();
  const CMatrix compressed = w.adjoint() * x * w;
  return w * compressed.diagonal().asDiagonal() * w.adjoint();
}

Unitary connecting_unitary(const Masa& a, const Masa& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("connecting_unitary: dimension mismatch");
  return Unitary(b.diagonalizer().mat() * a.diagonalizer().mat().adjoint());
}

Unitary connecting_unitary_in_basis(const Masa& a, const Masa& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("connecting_unitary_in_basis: dimension mismatch");
  }
  return Unitary(a.diagonalizer().mat().adjoint() * b.diagonalizer().mat());
}

bool is_orthogonal_pair(const Masa& a, const Masa& b, double tol) {
  const int n = a.dim();
  const CMatrix u = connecting_unitary_in_basis(a, b).mat();
  // tau(p_j q_k) = |u_{jk}|^2 / n must equal 1/n^2 for all j,k.
  const double target = 1.0 / n;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (std::abs(std::norm(u(j, k)) - target) > tol) return false;
    }
  }
  return true;
}

bool is_commuting_square(const Masa& a, const Masa& b, double tol) {
  const int n = a.dim();
  if (b.dim() != n) throw std::invalid_argument("is_commuting_square: dimension mismatch");
  // Both compositions must collapse every matrix unit to tau(e_ij) 1.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CMatrix unit = CMatrix::Zero(n, n);
      unit(i, j) = 1.0;
      const CMatrix scalar =
          (i == j) ? CMatrix(CMatrix::Identity(n, n) / n) : CMatrix(CMatrix::Zero(n, n));
      if (max_abs(conditional_expectation(a, conditional_expectation(b, unit)) - scalar) > tol)
        return false;
      if (max_abs(conditional_expectation(b, conditional_expectation(a, unit)) - scalar) > tol)
        return false;
    }
  }
  return true;
}

bool same_masa(const Masa& a, const Masa& b, double tol) {
  const int n = a.dim();
  if (b.dim() != n) return false;
  // Match each projection of a to its closest unused projection of b.
  std::vector<bool> used(n, false);
  for (int j = 0; j < n; ++j) {
    int best = -1;
    double best_overlap = -1.0;
    for (int k = 0; k < n; ++k) {
      if (used[k]) continue;
      const double overlap = (a.projection(j) * b.projection(k)).trace().real();
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = k;
      }
    }
    if (best < 0 || max_abs(a.projection(j) - b.projection(best)) > tol) return false;
    used[best] = true;
  }
  return true;
}

}  // namespace masaent
