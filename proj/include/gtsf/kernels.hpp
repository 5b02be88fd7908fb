#pragma once

// Kernels of the transform integrals: Kummer 1F1, Whittaker M and W, and the
// modified Bessel function K_nu.
//
// W_{tau,omega} is built from two M functions whose leading growth e^{z/2}
// cancels, so the combination is formed in long double and switched to the
// large-z asymptotic series once the cancellation would cost more digits
// than the asymptotic truncation.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gtsf/errors.hpp"
#include "gtsf/scalar_special.hpp"
#include "gtsf/series.hpp"

namespace gtsf::kernels {

namespace detail {

using Wide = long double;

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

template <class T>
T kummer_series(T alpha, T gamma_, T z, double tol, std::size_t max_terms,
                std::size_t* terms_used = nullptr) {
  T sum = 1;
  T term = 1;
  int small_run = 0;
  for (std::size_t k = 0; k + 1 < max_terms; ++k) {
    term *= (alpha + T(k)) / (gamma_ + T(k)) * z / T(k + 1);
    sum += term;
    if (std::abs(term) <= T(tol) * std::abs(sum)) {
      if (++small_run >= 3) {
        if (terms_used) *terms_used = k + 2;
        return sum;
      }
    } else {
      small_run = 0;
    }
  }
  throw Error(ErrorKind::NonConvergence, "kummer_1f1: series did not converge");
}

inline Wide recip_gamma_wide(Wide x) {
  if (x <= 0 && x == std::floor(x)) return 0;
  return 1.0L / std::tgamma(x);
}

inline Wide whittaker_m_wide(Wide tau, Wide omega, Wide z) {
  const Wide f = kummer_series<Wide>(0.5L + omega - tau, 2.0L * omega + 1.0L,
                                     z, 1e-19, 100000);
  return std::pow(z, 0.5L + omega) * std::exp(-0.5L * z) * f;
}

// Combination of M_{tau,omega} and M_{tau,-omega}; 2 omega must not be an
// integer.
inline Wide whittaker_w_combination(Wide tau, Wide omega, Wide z) {
  const Wide c1 = std::tgamma(-2.0L * omega) * recip_gamma_wide(0.5L - tau - omega);
  const Wide c2 = std::tgamma(2.0L * omega) * recip_gamma_wide(0.5L + omega - tau);
  Wide out = 0;
  if (c1 != 0) out += c1 * whittaker_m_wide(tau, omega, z);
  if (c2 != 0) out += c2 * whittaker_m_wide(tau, -omega, z);
  return out;
}

// W ~ e^{-z/2} z^tau sum_s (1/2+omega-tau)_s (1/2-omega-tau)_s / s! (-z)^-s
inline Wide whittaker_w_asymptotic(Wide tau, Wide omega, Wide z) {
  Wide sum = 1;
  Wide term = 1;
  Wide prev = std::numeric_limits<Wide>::infinity();
  for (int s = 0; s < 500; ++s) {
    term *= -(0.5L + omega - tau + s) * (0.5L - omega - tau + s) / ((s + 1) * z);
    const Wide mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    prev = mag;
    if (mag <= 1e-20L * std::abs(sum)) break;
  }
  return std::exp(-0.5L * z) * std::pow(z, tau) * sum;
}

}  // namespace detail

/// Below this argument W uses the M-combination; above it the asymptotic
/// series. At the switch both carry roughly 1e-10 relative error.
inline constexpr double kWhittakerAsymptoticSwitch = 22.0;

/// Half-width of the window around integer 2 omega where W is evaluated at
/// two offset orders and interpolated.
inline constexpr double kWhittakerOffset = 1e-6;

inline double kummer_1f1(double alpha, double gamma_, double z,
                         double tol = 1e-12, std::size_t* terms_used = nullptr) {
  if (!std::isfinite(alpha) || !std::isfinite(gamma_) || !std::isfinite(z)) {
    throw Error(ErrorKind::Domain, "kummer_1f1: non-finite argument");
  }
  if (detail::is_nonpositive_integer(gamma_)) {
    throw Error(ErrorKind::Pole, "kummer_1f1: gamma is a non-positive integer");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::Domain, "kummer_1f1: tol must be positive");
  return double(detail::kummer_series<detail::Wide>(alpha, gamma_, z, tol,
                                                    100000, terms_used));
}

inline double whittaker_m(double tau, double omega, double z) {
  if (!(z > 0.0)) throw Error(ErrorKind::Domain, "whittaker_m: z must be positive");
  if (detail::is_nonpositive_integer(2.0 * omega + 1.0)) {
    throw Error(ErrorKind::Pole, "whittaker_m: 2 omega + 1 is a non-positive integer");
  }
  return double(detail::whittaker_m_wide(tau, omega, z));
}

inline double whittaker_w(double tau, double omega, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw Error(ErrorKind::Domain, "whittaker_w: z must be positive");
  }
  if (z >= kWhittakerAsymptoticSwitch) {
    return double(detail::whittaker_w_asymptotic(tau, omega, z));
  }
  const double nearest = std::round(2.0 * omega) / 2.0;
  const double offset = omega - nearest;
  if (std::abs(offset) >= kWhittakerOffset) {
    return double(detail::whittaker_w_combination(tau, omega, z));
  }
  // Near-integer 2 omega: evaluate on both sides and interpolate linearly.
  const detail::Wide eps = kWhittakerOffset;
  const detail::Wide lo = detail::whittaker_w_combination(tau, nearest - eps, z);
  const detail::Wide hi = detail::whittaker_w_combination(tau, nearest + eps, z);
  const detail::Wide avg = 0.5L * (lo + hi);
  if (std::abs(hi - lo) > 1e-4L * std::abs(avg)) {
    throw Error(ErrorKind::EvaluationUnstable,
                "whittaker_w: offset evaluations disagree near integer 2 omega");
  }
  const detail::Wide t = (detail::Wide(offset) + eps) / (2.0L * eps);
  return double(lo + t * (hi - lo));
}

namespace detail {

// 1/Gamma(1+x) = sum_k kRecipGammaTaylor[k] x^k (Abramowitz & Stegun 6.1.34,
// shifted by one index).
inline constexpr double kRecipGammaTaylor[] = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
};

// gam1 = (1/Gamma(1-x) - 1/Gamma(1+x)) / (2x), gam2 = (1/Gamma(1-x) +
// 1/Gamma(1+x)) / 2, for |x| <= 1/2.
inline void temme_gammas(double x, double& gam1, double& gam2, double& gampl,
                         double& gammi) {
  if (std::abs(x) < 0.1) {
    // 1/Gamma(1 +- x) = even +- x * odd, both even functions of x
    double odd = 0.0;
    double even = 0.0;
    double x2k = 1.0;
    for (std::size_t k = 0; k + 1 < std::size(kRecipGammaTaylor); k += 2) {
      even += kRecipGammaTaylor[k] * x2k;
      odd += kRecipGammaTaylor[k + 1] * x2k;
      x2k *= x * x;
    }
    gam1 = -odd;
    gam2 = even;
    gampl = even + x * odd;
    gammi = even - x * odd;
    return;
  }
  gampl = special::recip_gamma(1.0 + x);
  gammi = special::recip_gamma(1.0 - x);
  gam1 = (gammi - gampl) / (2.0 * x);
  gam2 = 0.5 * (gammi + gampl);
}

// K_nu via Temme's series (x < 2) or Steed's continued fraction (x >= 2) for
// the fractional part, then forward recurrence in the order.
inline double bessel_k_temme(double nu, double x) {
  constexpr double eps = 1e-16;
  constexpr int max_iter = 100000;
  const int nl = int(nu + 0.5);
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  double rkmu = 0.0;
  double rk1 = 0.0;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = std::numbers::pi * xmu;
    const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = xmu * d;
    const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(xmu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= max_iter; ++i) {
      ff = (i * ff + p + q) / (i * double(i) - xmu2);
      c *= d / i;
      p /= i - xmu;
      q /= i + xmu;
      const double del = c * ff;
      sum += del;
      const double del1 = c * (p - i * ff);
      sum1 += del1;
      if (std::abs(del) < std::abs(sum) * eps) break;
    }
    if (i > max_iter) {
      throw Error(ErrorKind::NonConvergence, "bessel_k: Temme series failed");
    }
    rkmu = sum;
    rk1 = sum1 * xi2;
  } else {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - xmu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i <= max_iter; ++i) {
      a -= 2 * i;
      c = -a * c / (i + 1.0);
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      h += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < eps) break;
    }
    if (i > max_iter) {
      throw Error(ErrorKind::NonConvergence, "bessel_k: continued fraction failed");
    }
    h = a1 * h;
    rkmu = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
  }
  for (int i = 1; i <= nl; ++i) {
    const double next = (xmu + i) * xi2 * rk1 + rkmu;
    rkmu = rk1;
    rk1 = next;
  }
  return rkmu;
}

}  // namespace detail

/// Width of the window |2 nu - n| below which K_nu leaves the Whittaker
/// route for the Temme/Steed path.
inline constexpr double kBesselKWindow = 1e-3;

inline bool bessel_k_uses_whittaker(double nu) {
  const double twice = 2.0 * std::abs(nu);
  return std::abs(twice - std::round(twice)) >= kBesselKWindow;
}

/// K_nu(z) = sqrt(pi / (2z)) W_{0,nu}(2z), with the Temme/Steed path for
/// (near) half-integer and integer orders.
inline double bessel_k(double nu, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw Error(ErrorKind::Domain, "bessel_k: z must be positive");
  }
  if (!std::isfinite(nu)) throw Error(ErrorKind::Domain, "bessel_k: non-finite order");
  nu = std::abs(nu);
  if (!bessel_k_uses_whittaker(nu)) return detail::bessel_k_temme(nu, z);
  return std::sqrt(std::numbers::pi / (2.0 * z)) * whittaker_w(0.0, nu, 2.0 * z);
}

}  // namespace gtsf::kernels
