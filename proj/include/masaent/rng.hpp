#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace masaent {

// SplitMix64 step; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic random stream. The engine (mt19937_64) is fully specified
/// by the standard; the distribution transforms live here because the
/// <random> distributions are implementation-defined and reports must be
/// reproducible byte-for-byte for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent child stream; children with distinct salts may be consumed
  // in any order (or in parallel) without affecting each other.
  Rng substream(std::uint64_t salt) const;

  double uniform01();                    // [0, 1)
  double gaussian();                     // standard normal, Box-Muller
  double exponential();                  // rate 1
  int uniform_int(int lo, int hi);       // inclusive bounds
  std::vector<double> dirichlet(int k);  // flat Dirichlet(1,...,1)

  std::uint64_t seed() const { return seed_; }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace masaent
