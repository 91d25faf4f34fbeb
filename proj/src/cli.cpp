#include "masaent/cli.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "masaent/functionals.hpp"
#include "masaent/io.hpp"
#include "masaent/masa.hpp"
#include "masaent/matrix.hpp"
#include "masaent/relent.hpp"
#include "masaent/stochastic.hpp"
#include "masaent/verify.hpp"

namespace masaent {

namespace {

/// Ordered key-value report with a plain-text and a JSON rendering; both are
/// deterministic for identical inputs.
class Report {
 public:
  void add(const std::string& key, double v) {
    doc_[key] = v;
    lines_.push_back(key + " " + format9(v));
  }
  void add(const std::string& key, bool v) {
    doc_[key] = v;
    lines_.push_back(key + std::string(v ? " true" : " false"));
  }
  void add(const std::string& key, long long v) {
    doc_[key] = v;
    lines_.push_back(key + " " + std::to_string(v));
  }
  void add(const std::string& key, std::uint64_t v) {
    doc_[key] = v;
    lines_.push_back(key + " " + std::to_string(v));
  }
  void add(const std::string& key, int v) { add(key, static_cast<long long>(v)); }

  std::string render(bool as_json) const {
    if (as_json) return doc_.dump() + "\n";
    std::string text;
    for (const std::string& line : lines_) {
      text += line;
      text += '\n';
    }
    return text;
  }

 private:
  nlohmann::ordered_json doc_ = nlohmann::ordered_json::object();
  std::vector<std::string> lines_;
};

struct RunConfig {
  std::string input_a;
  std::string input_b;
  std::string suite;
  std::string kind;
  std::string perm;
  std::string out_path;
  int n = 0;
  std::uint64_t seed = 1;
  int restarts = 0;
  int trials = 100;
  double tol = kOrthogonalTol;
  bool as_json = false;
};

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  out << text;
  if (!cfg.out_path.empty()) write_file(cfg.out_path, text);
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
  const Unitary u(read_matrix_file(cfg.input_a));
  const int n = u.dim();
  const Masa diag = diagonal_masa(n);
  Report r;
  r.add("n", n);
  r.add("h", entropy(unistochastic(u)));
  r.add("max_entropy", std::log(static_cast<double>(n)));
  r.add("orthogonal", is_orthogonal_pair(diag, conjugate_masa(diag, u), cfg.tol));
  emit(r.render(cfg.as_json), cfg, out);
  return 0;
}

int cmd_hclosed(const RunConfig& cfg, std::ostream& out) {
  const Masa a(Unitary(read_matrix_file(cfg.input_a)));
  const Masa b(Unitary(read_matrix_file(cfg.input_b)));
  if (a.dim() != b.dim()) throw std::invalid_argument("hclosed: dimension mismatch");
  Report r;
  r.add("n", a.dim());
  r.add("h_closed", h_closed(a, b));
  r.add("max_entropy", std::log(static_cast<double>(a.dim())));
  emit(r.render(cfg.as_json), cfg, out);
  return 0;
}

int cmd_orthogonal(const RunConfig& cfg, std::ostream& out) {
  const Masa a(Unitary(read_matrix_file(cfg.input_a)));
  const Masa b(Unitary(read_matrix_file(cfg.input_b)));
  if (a.dim() != b.dim()) throw std::invalid_argument("orthogonal: dimension mismatch");
  Report r;
  r.add("n", a.dim());
  r.add("orthogonal", is_orthogonal_pair(a, b, cfg.tol));
  r.add("commuting_square", is_commuting_square(a, b, cfg.tol));
  r.add("entropy_maximal", is_entropy_maximal(a, b));
  emit(r.render(cfg.as_json), cfg, out);
  return 0;
}

int cmd_hphi(const RunConfig& cfg, std::ostream& out) {
  const PositiveFunctional phi(read_matrix_file(cfg.input_a));
  if (!phi.is_state()) throw std::invalid_argument("hphi: density trace must be 1");
  const Unitary u(read_matrix_file(cfg.input_b));
  if (u.dim() != phi.dim()) throw std::invalid_argument("hphi: dimension mismatch");

  // Align the density's eigenbasis with the standard basis first; the closed
  // form is defined relative to the algebra that diagonalizes the state.
  const Unitary v = hermitian_eigendecomposition(phi.density()).basis;
  const PositiveFunctional aligned = inner_perturbation(phi, v);
  const HphiTerms terms = h_phi_closed_terms(aligned, u);

  Report r;
  r.add("n", phi.dim());
  r.add("h_phi", terms.value);
  r.add("term_weighted_entropy", terms.weighted_entropy_term);
  r.add("term_entropy_diagonal", terms.entropy_diagonal);
  r.add("term_entropy_conjugated", terms.entropy_conjugated);
  if (cfg.restarts > 0) {
    const VariationalReport vr = h_phi_variational(aligned, u, cfg.restarts, cfg.seed);
    r.add("value", vr.best_value);
    r.add("closed_form", vr.closed_form);
    r.add("gap", vr.gap);
    r.add("iterations", vr.iterations);
    r.add("seed", vr.seed);
  }
  emit(r.render(cfg.as_json), cfg, out);
  return 0;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  CMatrix m;
  if (cfg.kind == "fourier") {
    if (cfg.n < 1) throw ParseError("gen fourier: --n must be a positive integer");
    m = fourier_matrix(cfg.n).mat();
  } else if (cfg.kind == "random") {
    if (cfg.n < 1) throw ParseError("gen random: --n must be a positive integer");
    m = random_unitary(cfg.n, cfg.seed).mat();
  } else if (cfg.kind == "permutation") {
    std::vector<int> perm;
    if (!cfg.perm.empty()) {
      std::istringstream in(cfg.perm);
      std::string token;
      while (std::getline(in, token, ',')) {
        try {
          std::size_t used = 0;
          const int value = std::stoi(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
          perm.push_back(value);
        } catch (const std::exception&) {
          throw ParseError("gen permutation: --perm must be comma-separated integers");
        }
      }
    } else {
      if (cfg.n < 1) throw ParseError("gen permutation: pass --perm or --n");
      Rng rng(cfg.seed);
      perm = random_permutation(cfg.n, rng);
    }
    try {
      m = permutation_unitary(perm).mat();
    } catch (const std::invalid_argument&) {
      throw ParseError("gen permutation: indices must form a permutation of 0..n-1");
    }
  } else {
    throw ParseError("gen: kind must be fourier, random, or permutation");
  }
  emit(write_matrix(m) + "\n", cfg, out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!is_suite_name(cfg.suite)) throw ParseError("verify: unknown suite: " + cfg.suite);
  const int n = cfg.n > 0 ? cfg.n : 4;
  const SuiteReport report = run_suite(cfg.suite, n, cfg.seed, cfg.trials);

  std::string text;
  if (cfg.as_json) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["n"] = report.n;
    doc["seed"] = report.seed;
    doc["trials"] = report.trials;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
      nlohmann::ordered_json entry;
      entry["name"] = c.name;
      entry["max_deviation"] = c.max_deviation;
      entry["tolerance"] = c.tolerance;
      entry["pass"] = c.pass;
      if (!c.detail.empty()) entry["detail"] = c.detail;
      doc["checks"].push_back(entry);
    }
    doc["pass"] = report.pass;
    text = doc.dump() + "\n";
  } else {
    std::ostringstream lines;
    lines << "suite " << report.suite << '\n';
    lines << "n " << report.n << '\n';
    lines << "seed " << report.seed << '\n';
    lines << "trials " << report.trials << '\n';
    for (const CheckResult& c : report.checks) {
      lines << "check " << c.name << " max_deviation " << format9(c.max_deviation)
            << " tolerance " << format9(c.tolerance) << (c.pass ? " pass" : " fail") << '\n';
      if (!c.detail.empty()) lines << "# " << c.detail << '\n';
    }
    lines << "result " << (report.pass ? "pass" : "fail") << '\n';
    text = lines.str();
  }
  emit(text, cfg, out);
  return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Conditional relative entropy for maximal abelian subalgebras of M_n(C)"};
  app.name("masaent");
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool with_out) {
    cmd->add_flag("--json", cfg.as_json, "Emit the report as a JSON document");
    if (with_out) cmd->add_option("--out", cfg.out_path, "Also write the report to this file");
  };

  CLI::App* entropy =
      app.add_subcommand("entropy", "Entropy of a unitary's squared-modulus matrix");
  entropy->add_option("unitary", cfg.input_a, "Unitary matrix document")->required();
  entropy->add_option("--tol", cfg.tol, "Orthogonality tolerance (default 1e-9)");
  add_common(entropy, true);

  CLI::App* hclosed = app.add_subcommand("hclosed", "Conditional entropy h(A|B) of two algebras");
  hclosed->add_option("algebra_a", cfg.input_a, "Diagonalizer of A")->required();
  hclosed->add_option("algebra_b", cfg.input_b, "Diagonalizer of B")->required();
  add_common(hclosed, true);

  CLI::App* orthogonal =
      app.add_subcommand("orthogonal", "Orthogonality, commuting-square, and maximality verdicts");
  orthogonal->add_option("algebra_a", cfg.input_a, "Diagonalizer of A")->required();
  orthogonal->add_option("algebra_b", cfg.input_b, "Diagonalizer of B")->required();
  orthogonal->add_option("--tol", cfg.tol, "Orthogonality tolerance (default 1e-9)");
  add_common(orthogonal, true);

  CLI::App* hphi =
      app.add_subcommand("hphi", "State-weighted conditional entropy h_phi with its summands");
  hphi->add_option("state", cfg.input_a, "Density matrix document (trace 1)")->required();
  hphi->add_option("unitary", cfg.input_b, "Unitary matrix document")->required();
  hphi->add_option("--restarts", cfg.restarts, "Variational restarts (0 skips the search)")
      ->check(CLI::NonNegativeNumber);
  hphi->add_option("--seed", cfg.seed, "Seed for the variational search");
  add_common(hphi, true);

  CLI::App* gen = app.add_subcommand("gen", "Generate a unitary matrix document");
  gen->add_option("kind", cfg.kind, "fourier | random | permutation")->required();
  gen->add_option("--n", cfg.n, "Dimension")->check(CLI::PositiveNumber);
  gen->add_option("--seed", cfg.seed, "Seed for random kinds");
  gen->add_option("--perm", cfg.perm, "Explicit permutation, e.g. 2,0,1");
  add_common(gen, true);

  CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", cfg.suite,
                     "lemma1 | theorem2 | corollary3 | corollary4 | corollary5 | gauge")
      ->required();
  verify->add_option("--n", cfg.n, "Dimension (default 4)")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Master seed");
  verify->add_option("--trials", cfg.trials, "Randomized instances per check")
      ->check(CLI::PositiveNumber);
  add_common(verify, true);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("masaent");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (entropy->parsed()) return cmd_entropy(cfg, out);
    if (hclosed->parsed()) return cmd_hclosed(cfg, out);
    if (orthogonal->parsed()) return cmd_orthogonal(cfg, out);
    if (hphi->parsed()) return cmd_hphi(cfg, out);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace masaent
