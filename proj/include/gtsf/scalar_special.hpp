#pragma once

// Gamma-family functions for real and complex arguments.
//
// All evaluations use the Lanczos approximation with g = 7 and nine
// coefficients (the widely published set from Godfrey), which gives about
// 15 significant digits for Re(z) >= 1/2. Arguments left of 1/2 go through
// the reflection formula Gamma(z) Gamma(1 - z) = pi / sin(pi z).

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gtsf/errors.hpp"

namespace gtsf::special {

using ComplexValue = std::complex<double>;

namespace detail {

inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

inline bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && x == std::floor(x);
}

inline void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::Domain, std::string(who) + ": non-finite argument");
  }
}

inline void require_finite(ComplexValue z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::Domain, std::string(who) + ": non-finite argument");
  }
}

// sin(pi x) with exact zeros at the integers.
inline double sin_pi(double x) noexcept {
  if (x == std::floor(x)) return 0.0;
  // reduce to [-1, 1]
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

template <class T>
T lanczos_sum(T zm1) {
  T acc = T(kLanczosCoeffs[0]);
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    acc += kLanczosCoeffs[i] / (zm1 + double(i));
  }
  return acc;
}

// ln Gamma(x) for x >= 1/2.
inline double log_gamma_right(double x) {
  const double zm1 = x - 1.0;
  const double t = zm1 + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (zm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(zm1));
}

inline ComplexValue log_gamma_right(ComplexValue z) {
  const ComplexValue zm1 = z - 1.0;
  const ComplexValue t = zm1 + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (zm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(zm1));
}

}  // namespace detail

// ln|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs;
  int sign;
};

inline SignedLogGamma log_gamma_signed(double x) {
  detail::require_finite(x, "log_gamma");
  if (detail::is_nonpositive_integer(x)) {
    throw Error(ErrorKind::Pole, "log_gamma: pole at non-positive integer " +
                                     std::to_string(x));
  }
  if (x >= 0.5) return {detail::log_gamma_right(x), 1};
  const double s = detail::sin_pi(x);
  const double value = std::log(std::numbers::pi / std::abs(s)) -
                       detail::log_gamma_right(1.0 - x);
  return {value, s < 0.0 ? -1 : 1};
}

/// ln|Gamma(x)|. Use log_gamma_signed when the sign matters (x < 0).
inline double log_gamma(double x) { return log_gamma_signed(x).log_abs; }

inline double gamma(double x) {
  detail::require_finite(x, "gamma");
  if (detail::is_nonpositive_integer(x)) {
    throw Error(ErrorKind::Pole, "gamma: pole at non-positive integer " +
                                     std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (detail::sin_pi(x) * gamma(1.0 - x));
  }
  if (x > 171.7) return HUGE_VAL;
  // Split the power so t^(x-1/2) cannot overflow before exp(-t) damps it.
  const double zm1 = x - 1.0;
  const double t = zm1 + detail::kLanczosG + 0.5;
  const double half = std::pow(t, 0.5 * (zm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) *
         detail::lanczos_sum(zm1);
}

/// Principal ln Gamma(z). On the real axis the imaginary part is 0 or pi
/// depending on the sign of Gamma; in the left half-plane the imaginary part
/// is reported modulo 2 pi.
inline ComplexValue log_gamma_complex(ComplexValue z) {
  detail::require_finite(z, "log_gamma_complex");
  if (z.imag() == 0.0) {
    const auto r = log_gamma_signed(z.real());
    return {r.log_abs, r.sign < 0 ? std::numbers::pi : 0.0};
  }
  if (z.real() >= 0.5) return detail::log_gamma_right(z);
  const ComplexValue s = std::sin(std::numbers::pi * z);
  ComplexValue value = std::log(std::numbers::pi) - std::log(s) -
                       detail::log_gamma_right(1.0 - z);
  const double two_pi = 2.0 * std::numbers::pi;
  const double im = std::remainder(value.imag(), two_pi);
  return {value.real(), im};
}

inline double recip_gamma(double x) {
  detail::require_finite(x, "recip_gamma");
  if (detail::is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) {
    return detail::sin_pi(x) * gamma(1.0 - x) / std::numbers::pi;
  }
  if (x > 171.0) {
    return std::exp(-detail::log_gamma_right(x));
  }
  return 1.0 / gamma(x);
}

inline ComplexValue recip_gamma(ComplexValue z) {
  detail::require_finite(z, "recip_gamma");
  if (z.imag() == 0.0) return recip_gamma(z.real());
  return std::exp(-log_gamma_complex(z));
}

inline double beta(double a, double b) {
  detail::require_finite(a, "beta");
  detail::require_finite(b, "beta");
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorKind::Domain, "beta: arguments must be positive");
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

/// Rising factorial (x)_n = x (x + 1) ... (x + n - 1).
template <class T>
T rising_factorial(T x, unsigned n) {
  T acc = T(1);
  for (unsigned i = 0; i < n; ++i) acc *= x + T(i);
  return acc;
}

}  // namespace gtsf::special
