#include "masaent/relent.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "masaent/stochastic.hpp"

namespace masaent {

namespace {

double max_offdiagonal(const CMatrix& m) {
  double dev = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != j) dev = std::max(dev, std::abs(m(i, j)));
    }
  }
  return dev;
}

RVector clipped_diagonal(const CMatrix& m) {
  RVector d(m.rows());
  for (int i = 0; i < m.rows(); ++i) d(i) = std::max(0.0, m(i, i).real());
  return d;
}

// tau(eta(y)) for Hermitian y via functional calculus.
double trace_eta(const CMatrix& y) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(y, Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (int i = 0; i < y.rows(); ++i) total += eta(std::max(0.0, solver.eigenvalues()(i)));
  return total / static_cast<double>(y.rows());
}

}  // namespace

PartitionOfUnity::PartitionOfUnity(std::vector<CMatrix> parts, bool scalar_projection_family)
    : parts_(std::move(parts)), scalar_projection_family_(scalar_projection_family) {
  if (parts_.empty()) throw std::invalid_argument("PartitionOfUnity: no parts");
  const Eigen::Index n = parts_.front().rows();
  CMatrix sum = CMatrix::Zero(n, n);
  for (const CMatrix& x : parts_) {
    if (x.rows() != n || x.cols() != n) {
      throw std::invalid_argument("PartitionOfUnity: part dimension mismatch");
    }
    if (!x.allFinite() || max_abs(x - x.adjoint()) > kHermitianTol) {
      throw std::invalid_argument("PartitionOfUnity: part is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(x, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-12) {
      throw std::invalid_argument("PartitionOfUnity: part is not positive semidefinite");
    }
    sum += x;
  }
  if (max_abs(sum - CMatrix::Identity(n, n)) > 1e-10) {
    throw std::invalid_argument("PartitionOfUnity: parts do not sum to 1");
  }
}

HphiTerms h_phi_closed_terms(const PositiveFunctional& phi, const Unitary& u) {
  const int n = phi.dim();
  if (u.dim() != n) throw std::invalid_argument("h_phi_closed: dimension mismatch");
  if (max_offdiagonal(phi.density()) > kDiagonalTol) {
    throw std::invalid_argument("h_phi_closed: density is not diagonal");
  }
  if (!phi.is_state()) throw std::invalid_argument("h_phi_closed: functional is not a state");

  const ProbabilityVector lambda(clipped_diagonal(phi.density()));
  const Masa diag = diagonal_masa(n);
  HphiTerms t;
  t.weighted_entropy_term = weighted_entropy(transpose(unistochastic(u)), lambda);
  t.entropy_diagonal = restricted_entropy(phi, diag);
  t.entropy_conjugated = restricted_entropy(phi, conjugate_masa(diag, u));
  t.value = t.weighted_entropy_term + t.entropy_diagonal - t.entropy_conjugated;
  return t;
}

double h_phi_closed(const PositiveFunctional& phi, const Unitary& u) {
  return h_phi_closed_terms(phi, u).value;
}

double h_closed(const Masa& a, const Masa& b) {
  return entropy(unistochastic(connecting_unitary_in_basis(a, b)));
}

double decomposition_objective(const Decomposition& d, const Unitary& u) {
  const int n = d.whole().dim();
  if (u.dim() != n) throw std::invalid_argument("decomposition_objective: dimension mismatch");
  if (!d.whole().is_state() || max_offdiagonal(d.whole().density()) > kDiagonalTol) {
    throw std::invalid_argument("decomposition_objective: whole must be a diagonal state");
  }
  for (const auto& part : d.parts()) {
    if (max_offdiagonal(part.density()) > kDiagonalTol) {
      throw std::invalid_argument("decomposition_objective: part density is not diagonal");
    }
  }
  const Masa diag = diagonal_masa(n);
  return decomposition_entropy_sum(d, diag) -
         decomposition_entropy_sum(d, conjugate_masa(diag, u));
}

double partition_objective(const PartitionOfUnity& p, const Masa& a, const Masa& b) {
  const int n = a.dim();
  if (p.dim() != n || b.dim() != n) {
    throw std::invalid_argument("partition_objective: dimension mismatch");
  }
  for (const CMatrix& x : p.parts()) {
    for (int j = 0; j < n; ++j) {
      const CMatrix& pj = a.projection(j);
      if (max_abs(x * pj - pj * x) > kMembershipTol) {
        throw std::invalid_argument("partition_objective: part does not lie in the algebra");
      }
    }
  }
  double total = 0.0;
  for (const CMatrix& x : p.parts()) {
    total += trace_eta(conditional_expectation(b, x)) - trace_eta(x);
  }
  return total;
}

Decomposition random_diagonal_decomposition(const PositiveFunctional& phi, int parts, Rng& rng) {
  if (parts <= 0) {
    throw std::invalid_argument("random_diagonal_decomposition: need at least one part");
  }
  const int n = phi.dim();
  if (max_offdiagonal(phi.density()) > kDiagonalTol) {
    throw std::invalid_argument("random_diagonal_decomposition: density is not diagonal");
  }
  const RVector w = clipped_diagonal(phi.density());
  std::vector<CMatrix> densities(static_cast<std::size_t>(parts), CMatrix::Zero(n, n));
  for (int k = 0; k < n; ++k) {
    const std::vector<double> split = rng.dirichlet(parts);
    for (int i = 0; i < parts; ++i) {
      densities[static_cast<std::size_t>(i)](k, k) = split[static_cast<std::size_t>(i)] * w(k);
    }
  }
  std::vector<PositiveFunctional> out;
  out.reserve(densities.size());
  for (CMatrix& q : densities) out.emplace_back(std::move(q));
  return Decomposition(std::move(out), phi);
}

PartitionOfUnity minimal_projection_family(const Masa& a) {
  return PartitionOfUnity(a.projections(), true);
}

PartitionOfUnity random_scalar_projection_family(const Masa& a, Rng& rng) {
  const int n = a.dim();
  // Random set partition of the projection indices into `blocks` blocks.
  const int blocks = rng.uniform_int(1, n);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(blocks));
  for (int b = 0; b < blocks; ++b) members[static_cast<std::size_t>(b)].push_back(b);
  for (int j = blocks; j < n; ++j) {
    members[static_cast<std::size_t>(rng.uniform_int(0, blocks - 1))].push_back(j);
  }
  std::vector<CMatrix> parts;
  for (const auto& block : members) {
    CMatrix proj = CMatrix::Zero(n, n);
    for (const int j : block) proj += a.projection(j);
    const int copies = rng.uniform_int(1, 3);
    const std::vector<double> weights = rng.dirichlet(copies);
    for (int c = 0; c < copies; ++c) {
      parts.push_back(weights[static_cast<std::size_t>(c)] * proj);
    }
  }
  return PartitionOfUnity(std::move(parts), true);
}

namespace {

// Fast objective for diagonal decompositions. Rows of `split` are the part
// weight vectors; `bu` is the unistochastic matrix of u. Equals
// decomposition_objective on the assembled decomposition up to rounding.
double diagonal_objective(const RMatrix& split, const RMatrix& bu, double whole_diag_entropy,
                          double whole_conj_entropy) {
  double part_diag = 0.0;
  for (int i = 0; i < split.rows(); ++i) {
    for (int k = 0; k < split.cols(); ++k) part_diag += eta(split(i, k));
  }
  double part_conj = 0.0;
  const RMatrix mixed = split * bu;
  for (int i = 0; i < mixed.rows(); ++i) {
    for (int j = 0; j < mixed.cols(); ++j) part_conj += eta(std::max(0.0, mixed(i, j)));
  }
  return (whole_diag_entropy - part_diag) - (whole_conj_entropy - part_conj);
}

struct DiagonalSearch {
  const RMatrix& bu;
  double whole_diag_entropy;
  double whole_conj_entropy;
  long long evals = 0;

  double objective(const RMatrix& split) {
    ++evals;
    return diagonal_objective(split, bu, whole_diag_entropy, whole_conj_entropy);
  }

  // Greedy coordinate transfer: for every weight coordinate and ordered part
  // pair, try moving the donor's mass with step halving; repeat passes until
  // one gains less than 1e-12.
  double improve(RMatrix& split) {
    double current = objective(split);
    const int parts = static_cast<int>(split.rows());
    const int n = static_cast<int>(split.cols());
    for (int pass = 0; pass < 1000; ++pass) {
      double pass_gain = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int from = 0; from < parts; ++from) {
          for (int to = 0; to < parts; ++to) {
            if (to == from) continue;
            double step = split(from, k);
            while (step > 1e-15) {
              if (step > split(from, k)) step = split(from, k);
              split(from, k) -= step;
              split(to, k) += step;
              const double moved = objective(split);
              if (moved > current) {
                pass_gain += moved - current;
                current = moved;
              } else {
                split(from, k) += step;
                split(to, k) -= step;
                step /= 2.0;
              }
            }
          }
        }
      }
      if (pass_gain < 1e-12) break;
    }
    return current;
  }
};

Decomposition assemble_diagonal(const RMatrix& split, const PositiveFunctional& phi) {
  const int n = phi.dim();
  std::vector<PositiveFunctional> parts;
  parts.reserve(static_cast<std::size_t>(split.rows()));
  for (int i = 0; i < split.rows(); ++i) {
    CMatrix q = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) q(k, k) = split(i, k);
    parts.emplace_back(std::move(q));
  }
  return Decomposition(std::move(parts), phi);
}

}  // namespace

VariationalReport h_phi_variational(const PositiveFunctional& phi, const Unitary& u, int restarts,
                                    std::uint64_t seed) {
  if (restarts < 0) throw std::invalid_argument("h_phi_variational: restarts must be >= 0");
  const int n = phi.dim();
  const double closed = h_phi_closed(phi, u);
  const RVector w = clipped_diagonal(phi.density());
  const RMatrix bu = unistochastic(u).mat();

  DiagonalSearch search{bu, 0.0, 0.0};
  for (int k = 0; k < n; ++k) search.whole_diag_entropy += eta(w(k));
  const RVector conj_weights = bu.transpose() * w;
  for (int j = 0; j < n; ++j) {
    search.whole_conj_entropy += eta(std::max(0.0, conj_weights(j)));
  }

  // The spectral split is the canonical candidate and is kept as sampled;
  // random restarts get local improvement.
  const SpectralSplit spectral = spectral_split(phi);
  VariationalReport report;
  report.closed_form = closed;
  report.seed = seed;
  report.witness = spectral.decomposition;
  report.best_value = decomposition_objective(spectral.decomposition, u);
  report.iterations = 1;

  const Rng master(seed);
  double best_fast = report.best_value;
  for (int r = 0; r < restarts; ++r) {
    Rng stream = master.substream(static_cast<std::uint64_t>(r) + 1);
    RMatrix split(n, n);
    for (int k = 0; k < n; ++k) {
      const std::vector<double> proportions = stream.dirichlet(n);
      for (int i = 0; i < n; ++i) split(i, k) = proportions[static_cast<std::size_t>(i)] * w(k);
    }
    search.evals = 0;
    const double value = search.improve(split);
    report.iterations += search.evals;
    if (value > best_fast) {
      best_fast = value;
      const Decomposition witness = assemble_diagonal(split, phi);
      report.best_value = decomposition_objective(witness, u);
      report.witness = witness;
    }
  }
  report.gap = report.closed_form - report.best_value;
  return report;
}

VariationalReport h_trace_variational(const Masa& a, const Masa& b, int restarts,
                                      std::uint64_t seed) {
  if (restarts < 0) throw std::invalid_argument("h_trace_variational: restarts must be >= 0");
  VariationalReport report;
  report.closed_form = h_closed(a, b);
  report.seed = seed;
  PartitionOfUnity minimal = minimal_projection_family(a);
  report.best_value = partition_objective(minimal, a, b);
  report.witness = std::move(minimal);
  report.iterations = 1;

  const Rng master(seed);
  for (int r = 0; r < restarts; ++r) {
    Rng stream = master.substream(static_cast<std::uint64_t>(r) + 1);
    PartitionOfUnity family = random_scalar_projection_family(a, stream);
    const double value = partition_objective(family, a, b);
    ++report.iterations;
    if (value > report.best_value) {
      report.best_value = value;
      report.witness = std::move(family);
    }
  }
  report.gap = report.closed_form - report.best_value;
  return report;
}

bool is_entropy_maximal(const Masa& a, const Masa& b, double tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("is_entropy_maximal: dimension mismatch");
  return std::abs(h_closed(a, b) - std::log(static_cast<double>(a.dim()))) <= tol;
}

}  // namespace masaent
