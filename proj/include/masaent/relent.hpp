#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "masaent/functionals.hpp"
#include "masaent/masa.hpp"
#include "masaent/matrix.hpp"

namespace masaent {

inline constexpr double kDiagonalTol = 1e-9;
inline constexpr double kMembershipTol = 1e-9;

/// Finite family (x_i) of PSD matrices with sum 1 within 1e-10. The flag
/// marks families whose members are scalar multiples of projections.
class PartitionOfUnity {
 public:
  explicit PartitionOfUnity(std::vector<CMatrix> parts, bool scalar_projection_family = false);

  int size() const { return static_cast<int>(parts_.size()); }
  int dim() const { return static_cast<int>(parts_.front().rows()); }
  const std::vector<CMatrix>& parts() const { return parts_; }
  bool scalar_projection_family() const { return scalar_projection_family_; }

 private:
  std::vector<CMatrix> parts_;
  bool scalar_projection_family_;
};

struct VariationalReport {
  double best_value = 0.0;
  double closed_form = 0.0;
  double gap = 0.0;  // closed_form - best_value
  long long iterations = 0;
  std::uint64_t seed = 0;
  std::variant<std::monostate, Decomposition, PartitionOfUnity> witness;
};

/// Closed form for h_phi(D | uDu*), D the diagonal algebra and phi a state
/// with diagonal density:
///   weighted_entropy(transpose(b(u)), lambda) + S(phi|_D) - S(phi|_{uDu*})
/// where lambda_k = Q_phi(k,k). Weight lambda_k multiplies the entropy of
/// row k of b(u); the value is invariant under reordering lambda together
/// with the rows, so the diagonal is taken as stored. Throws if the density
/// is not diagonal within 1e-9 or not a state.
double h_phi_closed(const PositiveFunctional& phi, const Unitary& u);

struct HphiTerms {
  double weighted_entropy_term;  // H_lambda(b(u)^T)
  double entropy_diagonal;       // S(phi|_D)
  double entropy_conjugated;     // S(phi|_{uDu*})
  double value;                  // first + second - third
};

HphiTerms h_phi_closed_terms(const PositiveFunctional& phi, const Unitary& u);

// h(A | B) = H(b(u)) for the connecting unitary expressed in A's basis.
// Always in [0, ln n].
double h_closed(const Masa& a, const Masa& b);

// Value of one decomposition in the supremum defining h_phi(D | uDu*):
//   [-sum_i S(phi_i|_D) + S(phi|_D)] - [-sum_i S(phi_i|_B) + S(phi|_B)]
// with B = uDu*. All part densities and the whole must be diagonal within
// 1e-9, and the whole a state.
double decomposition_objective(const Decomposition& d, const Unitary& u);

// Value of one partition of unity in the supremum defining h(A | B):
//   sum_i [ tau(eta(E_B(x_i))) - tau(eta(x_i)) ]
// Each part must commute with every projection of A within 1e-9.
double partition_objective(const PartitionOfUnity& p, const Masa& a, const Masa& b);

// Diagonal decomposition of a diagonal state: each column of the weight
// vector is split over `parts` parts with flat-Dirichlet proportions.
Decomposition random_diagonal_decomposition(const PositiveFunctional& phi, int parts, Rng& rng);

// The family of A's minimal projections.
PartitionOfUnity minimal_projection_family(const Masa& a);

// Random member of S'(A): A's projections are grouped into random blocks
// and each block projection is split into copies with Dirichlet scalar
// weights, so the family still sums to 1.
PartitionOfUnity random_scalar_projection_family(const Masa& a, Rng& rng);

/// Variational search for h_phi(D | uDu*) over diagonal decompositions with
/// n parts. The candidate set is the spectral split plus `restarts` random
/// Dirichlet splits, each refined by greedy coordinate transfer of weight
/// between parts (step halving, passes repeated until a full pass gains
/// less than 1e-12). Deterministic for a fixed seed; restarts draw from
/// independent substreams, so the result does not depend on their order.
VariationalReport h_phi_variational(const PositiveFunctional& phi, const Unitary& u, int restarts,
                                    std::uint64_t seed);

/// Variational check for h(A | B): best of the minimal-projection family
/// and `restarts` random scalar-projection families.
VariationalReport h_trace_variational(const Masa& a, const Masa& b, int restarts,
                                      std::uint64_t seed);

// True iff h_closed(A,B) is within tol of its maximum ln n.
bool is_entropy_maximal(const Masa& a, const Masa& b, double tol = 1e-6);

}  // namespace masaent
