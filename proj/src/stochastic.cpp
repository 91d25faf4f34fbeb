#include "masaent/stochastic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "masaent/functionals.hpp"

namespace masaent {

namespace {

// Clip floating-point dust; reject genuinely negative entries.
void clip_nonnegative(double& x, const char* who) {
  if (!(x >= kNegativeClip)) {
    throw std::invalid_argument(std::string(who) + ": negative entry");
  }
  if (x < 0.0) x = 0.0;
}

}  // namespace

BistochasticMatrix::BistochasticMatrix(RMatrix entries) : b_(std::move(entries)) {
  const int n = static_cast<int>(b_.rows());
  if (n == 0 || b_.cols() != n) {
    throw std::invalid_argument("BistochasticMatrix: matrix must be square and nonempty");
  }
  if (!b_.allFinite()) throw std::invalid_argument("BistochasticMatrix: non-finite entry");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) clip_nonnegative(b_(i, j), "BistochasticMatrix");
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(b_.row(i).sum() - 1.0) > kStochasticTol) {
      throw std::invalid_argument("BistochasticMatrix: row sum differs from 1");
    }
    if (std::abs(b_.col(i).sum() - 1.0) > kStochasticTol) {
      throw std::invalid_argument("BistochasticMatrix: column sum differs from 1");
    }
  }
}

ProbabilityVector::ProbabilityVector(RVector weights) : v_(std::move(weights)) {
  if (v_.size() == 0) throw std::invalid_argument("ProbabilityVector: empty vector");
  if (!v_.allFinite()) throw std::invalid_argument("ProbabilityVector: non-finite entry");
  for (int k = 0; k < v_.size(); ++k) clip_nonnegative(v_(k), "ProbabilityVector");
  if (std::abs(v_.sum() - 1.0) > 1e-10) {
    throw std::invalid_argument("ProbabilityVector: weights do not sum to 1");
  }
}

BistochasticMatrix unistochastic(const Unitary& u) {
  return BistochasticMatrix(u.mat().cwiseAbs2());
}

BistochasticMatrix transpose(const BistochasticMatrix& b) {
  return BistochasticMatrix(b.mat().transpose());
}

double entropy(const BistochasticMatrix& b) {
  const int n = b.dim();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) total += eta(b(i, j));
  }
  return total / n;
}

double weighted_entropy(const BistochasticMatrix& b, const ProbabilityVector& lambda) {
  const int n = b.dim();
  if (lambda.dim() != n) throw std::invalid_argument("weighted_entropy: dimension mismatch");
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    double column = 0.0;
    for (int j = 0; j < n; ++j) column += eta(b(j, k));
    total += lambda[k] * column;
  }
  return total;
}

}  // namespace masaent
