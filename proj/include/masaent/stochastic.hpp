#pragma once

#include "masaent/matrix.hpp"

namespace masaent {

inline constexpr double kStochasticTol = 1e-9;
inline constexpr double kNegativeClip = -1e-12;

/// Square matrix with nonnegative entries and all row and column sums equal
/// to 1 within kStochasticTol. Entries in [kNegativeClip, 0) are treated as
/// floating-point dust and clipped to 0; anything lower is rejected.
class BistochasticMatrix {
 public:
  explicit BistochasticMatrix(RMatrix entries);

  int dim() const { return static_cast<int>(b_.rows()); }
  const RMatrix& mat() const { return b_; }
  double operator()(int i, int j) const { return b_(i, j); }

 private:
  RMatrix b_;
};

/// Nonnegative vector summing to 1 within 1e-10, same clipping rule.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(RVector weights);

  int dim() const { return static_cast<int>(v_.size()); }
  const RVector& vec() const { return v_; }
  double operator[](int k) const { return v_(k); }

 private:
  RVector v_;
};

// b(u)_{ij} = |u_{ij}|^2.
BistochasticMatrix unistochastic(const Unitary& u);

BistochasticMatrix transpose(const BistochasticMatrix& b);

// H(b) = (1/n) sum_{ij} eta(b_{ij}).
double entropy(const BistochasticMatrix& b);

// H_lambda(b) = sum_k lambda_k sum_j eta(b_{jk}): column k is weighted by
// lambda_k.
double weighted_entropy(const BistochasticMatrix& b, const ProbabilityVector& lambda);

}  // namespace masaent
