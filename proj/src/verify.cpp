#include "masaent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "masaent/functionals.hpp"
#include "masaent/relent.hpp"
#include "masaent/stochastic.hpp"

namespace masaent {

namespace {

// Tracks the largest deviation seen and keeps the account of the worst
// offending instance so failures can name their witness.
struct Check {
  std::string name;
  double tolerance;
  double max_deviation = 0.0;
  std::string worst_detail;

  Check(std::string check_name, double tol) : name(std::move(check_name)), tolerance(tol) {}

  void observe(double deviation, const std::string& detail = std::string()) {
    if (deviation > max_deviation) {
      max_deviation = deviation;
      if (deviation > tolerance) worst_detail = detail;
    }
  }

  CheckResult finish() const {
    CheckResult r;
    r.name = name;
    r.max_deviation = max_deviation;
    r.tolerance = tolerance;
    r.pass = max_deviation <= tolerance;
    if (!r.pass) r.detail = worst_detail;
    return r;
  }
};

std::string fmt(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return buffer;
}

Unitary random_diagonal_phase(int n, Rng& rng) {
  CMatrix d = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    d(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform01());
  }
  return Unitary(std::move(d));
}

SuiteReport finish_report(std::string suite, int n, std::uint64_t seed, int trials,
                          std::vector<Check> checks) {
  SuiteReport report;
  report.suite = std::move(suite);
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  report.pass = true;
  for (const Check& c : checks) {
    report.checks.push_back(c.finish());
    report.pass = report.pass && report.checks.back().pass;
  }
  return report;
}

// Restriction of a functional to a MASA as a diagonal functional, for
// evaluating relative entropies of restrictions term by term.
PositiveFunctional restrict_to(const PositiveFunctional& f, const Masa& a) {
  const RVector w = restriction_weights(f, a);
  CMatrix q = CMatrix::Zero(w.size(), w.size());
  for (int j = 0; j < w.size(); ++j) q(j, j) = w(j);
  return PositiveFunctional(std::move(q));
}

SuiteReport run_lemma1(int n, std::uint64_t seed, int trials) {
  const Rng master(seed);
  std::vector<Check> checks;
  checks.emplace_back("restriction_identity", 1e-10);
  checks.emplace_back("compression_entropy", 1e-10);
  checks.emplace_back("entropy_monotonicity", 1e-10);
  checks.emplace_back("unitary_invariance", 1e-10);

  for (int t = 0; t < trials; ++t) {
    Rng rng = master.substream(static_cast<std::uint64_t>(t) + 1);
    const PositiveFunctional phi = random_state(n, rng);
    const Masa a = random_masa(n, rng);
    const int parts = 2 + t % 3;
    const Decomposition d = random_decomposition(phi, parts, rng);

    // Sum of relative entropies of the restrictions vs the entropy-difference
    // form; the two sides of one identity, computed through different code.
    const PositiveFunctional whole_restricted = restrict_to(phi, a);
    double direct = 0.0;
    for (const auto& part : d.parts()) {
      direct += relative_entropy(restrict_to(part, a), whole_restricted);
    }
    checks[0].observe(std::abs(direct - decomposition_entropy_sum(d, a)));

    // Restricted entropy vs von Neumann entropy of the compressed density.
    checks[1].observe(std::abs(restricted_entropy(phi, a) -
                               von_neumann_entropy(PositiveFunctional(
                                   conditional_expectation(a, phi.density())))));

    checks[2].observe(von_neumann_entropy(phi) - restricted_entropy(phi, a));

    const Unitary v = random_unitary(n, rng);
    checks[3].observe(
        std::abs(von_neumann_entropy(phi) - von_neumann_entropy(inner_perturbation(phi, v))));
  }
  return finish_report("lemma1", n, seed, trials, std::move(checks));
}

SuiteReport run_theorem2(int n, std::uint64_t seed, int trials) {
  const Rng master(seed);
  std::vector<Check> checks;
  checks.emplace_back("spectral_attainment", 1e-9);
  checks.emplace_back("upper_bound", 1e-9);
  checks.emplace_back("variational_gap", 1e-9);

  for (int t = 0; t < trials; ++t) {
    Rng rng = master.substream(static_cast<std::uint64_t>(t) + 1);
    const PositiveFunctional phi = random_diagonal_state(n, rng);
    const Unitary u = random_unitary(n, rng);
    const double closed = h_phi_closed(phi, u);

    checks[0].observe(
        std::abs(decomposition_objective(spectral_split(phi).decomposition, u) - closed));

    for (int k = 0; k < 20; ++k) {
      const Decomposition d = random_diagonal_decomposition(phi, n, rng);
      checks[1].observe(decomposition_objective(d, u) - closed);
    }

    const VariationalReport vr =
        h_phi_variational(phi, u, 3, master.substream(1000000 + static_cast<std::uint64_t>(t)).seed());
    checks[2].observe(std::abs(vr.gap));
  }
  return finish_report("theorem2", n, seed, trials, std::move(checks));
}

SuiteReport run_corollary3(int n, std::uint64_t seed, int trials) {
  const Rng master(seed);
  std::vector<Check> checks;
  checks.emplace_back("trace_equality", 1e-9);
  checks.emplace_back("state_bound", 1e-9);

  for (int t = 0; t < trials; ++t) {
    Rng rng = master.substream(static_cast<std::uint64_t>(t) + 1);
    const Unitary u = random_unitary(n, rng);
    const Masa diag = diagonal_masa(n);
    const double h = h_closed(diag, conjugate_masa(diag, u));

    checks[0].observe(std::abs(h_phi_closed(trace_state(n), u) - h));

    const PositiveFunctional phi = random_state(n, rng);
    const Unitary v = hermitian_eigendecomposition(phi.density()).basis;
    const PositiveFunctional aligned = inner_perturbation(phi, v);
    const double h_phi = h_phi_closed(aligned, u);
    const double excess = h_phi - h;
    std::string detail;
    if (excess > 1e-9) {
      // The spectral decomposition evaluated through restricted entropies is
      // a lower bound on the supremum that h_phi closes in one formula; when
      // it exceeds h_closed, the bound violation is real, not a rounding
      // artifact.
      const double certificate =
          decomposition_objective(spectral_split(aligned).decomposition, u);
      std::ostringstream msg;
      msg << "trial " << t << ": h_phi " << fmt(h_phi) << " exceeds h_closed " << fmt(h)
          << " by " << fmt(excess) << "; certificate: the spectral decomposition attains "
          << fmt(certificate)
          << " via restricted entropies, so the supremum over diagonal decompositions"
          << " genuinely exceeds h_closed for this instance";
      detail = msg.str();
    }
    checks[1].observe(excess, detail);
  }
  return finish_report("corollary3", n, seed, trials, std::move(checks));
}

SuiteReport run_corollary4(int n, std::uint64_t seed, int trials) {
  const Rng master(seed);
  std::vector<Check> checks;
  checks.emplace_back("minimal_attainment", 1e-9);
  checks.emplace_back("scalar_family_bound", 1e-9);
  checks.emplace_back("variational_gap", 1e-9);

  for (int t = 0; t < trials; ++t) {
    Rng rng = master.substream(static_cast<std::uint64_t>(t) + 1);
    const Masa a = random_masa(n, rng);
    const Masa b = random_masa(n, rng);
    const double h = h_closed(a, b);

    checks[0].observe(std::abs(partition_objective(minimal_projection_family(a), a, b) - h));

    for (int k = 0; k < 20; ++k) {
      const PartitionOfUnity family = random_scalar_projection_family(a, rng);
      checks[1].observe(partition_objective(family, a, b) - h);
    }

    const VariationalReport vr =
        h_trace_variational(a, b, 5, master.substream(1000000 + static_cast<std::uint64_t>(t)).seed());
    checks[2].observe(std::abs(vr.gap));
  }
  return finish_report("corollary4", n, seed, trials, std::move(checks));
}

SuiteReport run_corollary5(int n, std::uint64_t seed, int trials) {
  const Rng master(seed);
  std::vector<Check> checks;
  checks.emplace_back("fourier_value", 1e-12);
  checks.emplace_back("fourier_verdicts", 0.0);
  checks.emplace_back("equivalence_mismatches", 0.0);
  checks.emplace_back("popa_direct_mismatches", 0.0);

  const Masa diag = diagonal_masa(n);
  const Masa fourier = conjugate_masa(diag, fourier_matrix(n));
  checks[0].observe(std::abs(h_closed(diag, fourier) - std::log(static_cast<double>(n))));

  const auto verdict_mismatch = [](const Masa& a, const Masa& b) {
    const bool orth = is_orthogonal_pair(a, b);
    const bool maximal = is_entropy_maximal(a, b, 1e-6);
    const bool commuting = is_commuting_square(a, b);
    return (orth != maximal ? 1.0 : 0.0) + (orth != commuting ? 1.0 : 0.0);
  };
  const auto popa_mismatch = [](const Masa& a, const Masa& b) {
    const bool direct = popa_pairing_deviation(a, b) <= 1e-9;
    return direct == is_orthogonal_pair(a, b) ? 0.0 : 1.0;
  };

  if (!is_orthogonal_pair(diag, fourier) || !is_commuting_square(diag, fourier) ||
      !is_entropy_maximal(diag, fourier, 1e-6)) {
    checks[1].observe(1.0, "the flat-modulus pair fails a verdict");
  }
  double eq_mismatches = verdict_mismatch(diag, fourier);
  double popa_mismatches = popa_mismatch(diag, fourier);
  if (n >= 2) {
    // A non-orthogonal deterministic pair keeps the equivalence test honest.
    eq_mismatches += verdict_mismatch(diag, diag);
    popa_mismatches += popa_mismatch(diag, diag);
  }

  for (int t = 0; t < trials; ++t) {
    Rng rng = master.substream(static_cast<std::uint64_t>(t) + 1);
    const Masa a = random_masa(n, rng);
    const Masa b = random_masa(n, rng);
    eq_mismatches += verdict_mismatch(a, b);
    popa_mismatches += popa_mismatch(a, b);
  }
  checks[2].observe(eq_mismatches);
  checks[3].observe(popa_mismatches);
  return finish_report("corollary5", n, seed, trials, std::move(checks));
}

SuiteReport run_gauge(int n, std::uint64_t seed, int trials) {
  const Rng master(seed);
  std::vector<Check> checks;
  checks.emplace_back("regauge_invariance", 1e-10);
  checks.emplace_back("identity_zero", 1e-12);
  checks.emplace_back("range", 1e-12);

  const double log_n = std::log(static_cast<double>(n));
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.substream(static_cast<std::uint64_t>(t) + 1);
    const Masa a = random_masa(n, rng);
    const Masa b = random_masa(n, rng);
    const double h = h_closed(a, b);
    checks[2].observe(std::max(-h, h - log_n));
    checks[1].observe(std::abs(h_closed(a, a)));

    for (int k = 0; k < 10; ++k) {
      // Redescribe both algebras through permuted, rephased diagonalizers;
      // the connecting unitary changes by monomial factors on both sides.
      const Unitary left(a.diagonalizer().mat() *
                         permutation_unitary(random_permutation(n, rng)).mat() *
                         random_diagonal_phase(n, rng).mat());
      const Unitary right(b.diagonalizer().mat() *
                          permutation_unitary(random_permutation(n, rng)).mat() *
                          random_diagonal_phase(n, rng).mat());
      checks[0].observe(std::abs(h_closed(Masa(left), Masa(right)) - h));
    }
  }
  return finish_report("gauge", n, seed, trials, std::move(checks));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma1",     "theorem2",   "corollary3",
                                                 "corollary4", "corollary5", "gauge"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed, int trials) {
  if (n < 1) throw std::invalid_argument("run_suite: dimension must be positive");
  if (trials < 1) throw std::invalid_argument("run_suite: need at least one trial");
  if (name == "lemma1") return run_lemma1(n, seed, trials);
  if (name == "theorem2") return run_theorem2(n, seed, trials);
  if (name == "corollary3") return run_corollary3(n, seed, trials);
  if (name == "corollary4") return run_corollary4(n, seed, trials);
  if (name == "corollary5") return run_corollary5(n, seed, trials);
  if (name == "gauge") return run_gauge(n, seed, trials);
  throw std::invalid_argument("run_suite: unknown suite: " + name);
}

double popa_pairing_deviation(const Masa& a, const Masa& b) {
  const int n = a.dim();
  if (b.dim() != n) throw std::invalid_argument("popa_pairing_deviation: dimension mismatch");
  const CMatrix u = connecting_unitary(a, b).mat();
  double worst = 0.0;
  for (int s = 0; s + 1 < n; ++s) {
    const CMatrix left = a.projection(s) - a.projection(s + 1);
    for (int t = 0; t + 1 < n; ++t) {
      const CMatrix right = u * (a.projection(t) - a.projection(t + 1)) * u.adjoint();
      worst = std::max(worst, std::abs((left * right).trace()) / n);
    }
  }
  return worst;
}

}  // namespace masaent
