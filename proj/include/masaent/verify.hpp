#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "masaent/masa.hpp"
#include "masaent/matrix.hpp"

namespace masaent {

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // On failure, a human-readable account of the worst instance (seed-derived
  // inputs plus an independently computed certificate); empty otherwise.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;
  bool pass = false;
};

// {"lemma1", "theorem2", "corollary3", "corollary4", "corollary5", "gauge"}
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one named invariant suite at dimension n with `trials` randomized
// instances. Throws std::invalid_argument for an unknown name or bad sizes.
SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed, int trials);

// Largest |tau(a u b u*)| over pairs from the trace-zero basis
// {p_s - p_{s+1}} of a's algebra, u the connecting unitary onto b's. Zero
// exactly when the pair is orthogonal; an oracle for is_orthogonal_pair
// that never looks at entry moduli.
double popa_pairing_deviation(const Masa& a, const Masa& b);

}  // namespace masaent
