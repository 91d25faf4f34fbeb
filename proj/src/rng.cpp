#include "masaent/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace masaent {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

Rng Rng::substream(std::uint64_t salt) const {
  std::uint64_t s = seed_ ^ (0xa5a5a5a5a5a5a5a5ULL + salt);
  splitmix64(s);
  return Rng(splitmix64(s));
}

double Rng::uniform01() {
  // 53-bit mantissa; never returns 1.0.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

double Rng::exponential() {
  double u = uniform01();
  while (u <= 0.0) u = uniform01();
  return -std::log(u);
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = gen_();
  while (x >= limit) x = gen_();
  return lo + static_cast<int>(x % span);
}

std::vector<double> Rng::dirichlet(int k) {
  if (k <= 0) throw std::invalid_argument("dirichlet: need at least one part");
  std::vector<double> w(k);
  double total = 0.0;
  for (double& x : w) {
    x = exponential();
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace masaent
