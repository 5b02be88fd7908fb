#pragma once

// Shared helpers for the test binaries: relative error and a seeded
// generator for property tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace gtsf_test {

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  if (want == std::complex<double>{}) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

// Deterministic source of random parameters.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Uniform in (lo, hi) but at least `gap` away from every integer.
  double non_integer(double lo, double hi, double gap = 1e-3) {
    while (true) {
      const double v = uniform(lo, hi);
      if (std::abs(v - std::round(v)) > gap) return v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gtsf_test
