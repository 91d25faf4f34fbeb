#include "masaent/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace masaent {

double eta(double t) {
  if (t < 0.0) throw std::invalid_argument("eta: negative argument");
  return t == 0.0 ? 0.0 : -t * std::log(t);
}

PositiveFunctional::PositiveFunctional(CMatrix density) : q_(std::move(density)) {
  if (q_.rows() == 0 || q_.rows() != q_.cols()) {
    throw std::invalid_argument("PositiveFunctional: density must be square and nonempty");
  }
  if (!q_.allFinite() || max_abs(q_ - q_.adjoint()) > kHermitianTol) {
    throw std::invalid_argument("PositiveFunctional: density is not Hermitian");
  }
  q_ = (q_ + q_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(q_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() < -1e-12) {
    throw std::invalid_argument("PositiveFunctional: density is not positive semidefinite");
  }
}

bool PositiveFunctional::is_state(double tol) const { return std::abs(trace() - 1.0) <= tol; }

double PositiveFunctional::operator()(const CMatrix& x) const {
  if (x.rows() != q_.rows() || x.cols() != q_.cols()) {
    throw std::invalid_argument("PositiveFunctional: dimension mismatch");
  }
  return (q_ * x).trace().real();
}

PositiveFunctional trace_state(int n) {
  if (n <= 0) throw std::invalid_argument("trace_state: dimension must be positive");
  return PositiveFunctional(CMatrix::Identity(n, n) / n);
}

Decomposition::Decomposition(std::vector<PositiveFunctional> parts, PositiveFunctional whole)
    : parts_(std::move(parts)), whole_(std::move(whole)) {
  if (parts_.empty()) throw std::invalid_argument("Decomposition: no parts");
  CMatrix sum = CMatrix::Zero(whole_.dim(), whole_.dim());
  for (const auto& part : parts_) {
    if (part.dim() != whole_.dim()) {
      throw std::invalid_argument("Decomposition: part dimension mismatch");
    }
    sum += part.density();
  }
  if (max_abs(sum - whole_.density()) > 1e-10) {
    throw std::invalid_argument("Decomposition: parts do not sum to the whole");
  }
}

double von_neumann_entropy(const PositiveFunctional& f) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(f.density(), Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (int i = 0; i < f.dim(); ++i) total += eta(std::max(0.0, solver.eigenvalues()(i)));
  return total;
}

double relative_entropy(const PositiveFunctional& psi, const PositiveFunctional& phi) {
  const int n = psi.dim();
  if (phi.dim() != n) throw std::invalid_argument("relative_entropy: dimension mismatch");

  const HermitianEigen ep = hermitian_eigendecomposition(psi.density());
  const HermitianEigen eq = hermitian_eigendecomposition(phi.density());

  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    const double mu = ep.values(i);
    if (mu > kSupportTol) value += mu * std::log(mu);
  }

  // Weights of psi in phi's eigenbasis; mass on phi's null eigenvectors
  // means the support condition fails and the entropy is +infinity.
  const CMatrix mixed = eq.basis.mat().adjoint() * psi.density() * eq.basis.mat();
  double leaked = 0.0;
  for (int j = 0; j < n; ++j) {
    const double weight = std::max(0.0, mixed(j, j).real());
    const double nu = eq.values(j);
    if (nu > kSupportTol) {
      value -= weight * std::log(nu);
    } else {
      leaked += weight;
    }
  }
  if (leaked > kSupportTol) return std::numeric_limits<double>::infinity();
  return value;
}

RVector restriction_weights(const PositiveFunctional& f, const Masa& a) {
  const int n = f.dim();
  if (a.dim() != n) throw std::invalid_argument("restriction_weights: dimension mismatch");
  const CMatrix& w = a.diagonalizer().mat();
  const CMatrix compressed = w.adjoint() * f.density() * w;
  RVector weights(n);
  for (int j = 0; j < n; ++j) weights(j) = std::max(0.0, compressed(j, j).real());
  return weights;
}

double restricted_entropy(const PositiveFunctional& f, const Masa& a) {
  const RVector weights = restriction_weights(f, a);
  double total = 0.0;
  for (int j = 0; j < a.dim(); ++j) total += eta(weights(j));
  return total;
}

double decomposition_entropy_sum(const Decomposition& d, const Masa& a) {
  if (!d.whole().is_state()) {
    throw std::invalid_argument("decomposition_entropy_sum: whole must be a state");
  }
  double total = restricted_entropy(d.whole(), a);
  for (const auto& part : d.parts()) total -= restricted_entropy(part, a);
  return total;
}

SpectralSplit spectral_split(const PositiveFunctional& state) {
  if (!state.is_state()) throw std::invalid_argument("spectral_split: functional is not a state");
  const HermitianEigen eig = hermitian_eigendecomposition(state.density());
  const int n = state.dim();
  RVector lambda(n);
  std::vector<PositiveFunctional> parts;
  parts.reserve(n);
  for (int i = 0; i < n; ++i) {
    lambda(i) = std::max(0.0, eig.values(i));
    const CMatrix v = eig.basis.mat().col(i);
    parts.emplace_back(CMatrix(lambda(i) * v * v.adjoint()));
  }
  return SpectralSplit{Decomposition(std::move(parts), state), Masa(eig.basis),
                       ProbabilityVector(std::move(lambda))};
}

PositiveFunctional inner_perturbation(const PositiveFunctional& f, const Unitary& v) {
  if (v.dim() != f.dim()) throw std::invalid_argument("inner_perturbation: dimension mismatch");
  return PositiveFunctional(v.mat().adjoint() * f.density() * v.mat());
}

PositiveFunctional random_state(int n, Rng& rng) {
  const Unitary v = random_unitary(n, rng);
  const std::vector<double> lambda = rng.dirichlet(n);
  CMatrix q = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    q += lambda[static_cast<std::size_t>(i)] * v.mat().col(i) * v.mat().col(i).adjoint();
  }
  return PositiveFunctional(std::move(q));
}

PositiveFunctional random_diagonal_state(int n, Rng& rng) {
  const std::vector<double> lambda = rng.dirichlet(n);
  CMatrix q = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) q(i, i) = lambda[static_cast<std::size_t>(i)];
  return PositiveFunctional(std::move(q));
}

namespace {

// Hermitian square root with negative dust clipped.
CMatrix psd_sqrt(const CMatrix& q) {
  const HermitianEigen eig = hermitian_eigendecomposition(q);
  const int n = static_cast<int>(q.rows());
  RVector roots(n);
  for (int i = 0; i < n; ++i) roots(i) = std::sqrt(std::max(0.0, eig.values(i)));
  return eig.basis.mat() * roots.asDiagonal() * eig.basis.mat().adjoint();
}

}  // namespace

Decomposition random_decomposition(const PositiveFunctional& phi, int parts, Rng& rng) {
  if (parts <= 0) throw std::invalid_argument("random_decomposition: need at least one part");
  const int n = phi.dim();
  std::vector<CMatrix> raw;
  raw.reserve(static_cast<std::size_t>(parts));
  CMatrix total = CMatrix::Zero(n, n);
  for (int i = 0; i < parts; ++i) {
    CMatrix g(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    }
    raw.push_back(g * g.adjoint());
    total += raw.back();
  }
  // Whiten so the raw pieces sum to the identity, then compress by sqrt(Q):
  // the parts stay PSD and sum to Q exactly up to rounding.
  const HermitianEigen eig = hermitian_eigendecomposition(total);
  RVector inv_roots(n);
  for (int i = 0; i < n; ++i) inv_roots(i) = 1.0 / std::sqrt(std::max(eig.values(i), 1e-300));
  const CMatrix whiten = eig.basis.mat() * inv_roots.asDiagonal() * eig.basis.mat().adjoint();
  const CMatrix root = psd_sqrt(phi.density());

  std::vector<PositiveFunctional> out;
  out.reserve(raw.size());
  for (const CMatrix& piece : raw) {
    out.emplace_back(CMatrix(root * whiten * piece * whiten * root));
  }
  return Decomposition(std::move(out), phi);
}

}  // namespace masaent
