#pragma once

// Generalized (Fox-)Wright function
//
//   pPsiq[(a_i, alpha_i); (b_j, beta_j) | z]
//     = sum_k prod Gamma(a_i + alpha_i k) / prod Gamma(b_j + beta_j k) z^k / k!
//
// Terms are built in log space with exact sign tracking for real gamma
// arguments, then exponentiated once per term.
//
// Convergence is governed by kappa = sum beta_j - sum alpha_i:
//   kappa > -1   entire, summed directly for every z;
//   kappa = -1   radius R = prod |beta_j|^beta_j / prod |alpha_i|^alpha_i.
//                Inside the disc the series is summed directly. On the
//                circle at z = -R (an alternating boundary point, where the
//                function is analytic) the Levin transform is used.
//   otherwise    ConvergenceViolation.

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "gtsf/errors.hpp"
#include "gtsf/scalar_special.hpp"
#include "gtsf/series.hpp"

namespace gtsf {

struct WrightPair {
  std::complex<double> a;
  double alpha;
};

struct WrightParams {
  std::vector<WrightPair> upper;
  std::vector<WrightPair> lower;
};

enum class SummationMode { Direct, Boundary };

inline double kappa(const WrightParams& params) {
  double k = 0.0;
  for (const auto& l : params.lower) k += l.alpha;
  for (const auto& u : params.upper) k -= u.alpha;
  return k;
}

namespace detail {

inline constexpr double kKappaBoundaryTol = 1e-12;

inline void validate_pairs(const WrightParams& params) {
  auto check = [](const WrightPair& pr) {
    if (pr.alpha == 0.0 || !std::isfinite(pr.alpha) ||
        !std::isfinite(pr.a.real()) || !std::isfinite(pr.a.imag())) {
      throw Error(ErrorKind::Domain,
                  "wright: pair coefficients must be finite and nonzero");
    }
  };
  for (const auto& u : params.upper) check(u);
  for (const auto& l : params.lower) check(l);
}

inline bool on_real_pole(std::complex<double> z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Accumulates a product/quotient of gammas as log-magnitude and unit phase.
struct LogProduct {
  double log_mag = 0.0;
  std::complex<double> phase{1.0, 0.0};
  double error_scale = 0.0;

  void mul_gamma(std::complex<double> arg, int power) {
    if (arg.imag() == 0.0) {
      const auto lg = special::log_gamma_signed(arg.real());
      log_mag += power * lg.log_abs;
      if (lg.sign < 0) phase = -phase;
      error_scale += std::abs(lg.log_abs);
    } else {
      const auto lg = special::log_gamma_complex(arg);
      log_mag += power * lg.real();
      phase *= std::polar(1.0, power * lg.imag());
      error_scale += std::abs(lg.real()) + std::abs(lg.imag());
    }
  }
};

}  // namespace detail

inline double convergence_radius(const WrightParams& params) {
  const double kap = kappa(params);
  if (kap > -1.0 + detail::kKappaBoundaryTol) {
    return std::numeric_limits<double>::infinity();
  }
  if (kap < -1.0 - detail::kKappaBoundaryTol) return 0.0;
  double log_r = 0.0;
  for (const auto& l : params.lower) {
    log_r += l.alpha * std::log(std::abs(l.alpha));
  }
  for (const auto& u : params.upper) {
    log_r -= u.alpha * std::log(std::abs(u.alpha));
  }
  return std::exp(log_r);
}

// Decides how the series at z can be summed, or throws ConvergenceViolation.
inline SummationMode check_convergence(const WrightParams& params,
                                       std::complex<double> z) {
  detail::validate_pairs(params);
  const double kap = kappa(params);
  if (z == std::complex<double>{}) return SummationMode::Direct;
  if (kap > -1.0 + detail::kKappaBoundaryTol) return SummationMode::Direct;
  if (kap < -1.0 - detail::kKappaBoundaryTol) {
    throw Error(ErrorKind::ConvergenceViolation,
                "wright: kappa = " + std::to_string(kap) +
                    " <= -1, series diverges for z != 0");
  }
  const double radius = convergence_radius(params);
  const double mod = std::abs(z);
  const double rel = 1e-12;
  if (mod < radius * (1.0 - rel)) return SummationMode::Direct;
  if (mod <= radius * (1.0 + rel) && z.real() < 0.0 &&
      std::abs(z.imag()) <= rel * radius) {
    return SummationMode::Boundary;
  }
  throw Error(ErrorKind::ConvergenceViolation,
              "wright: kappa = -1 and |z| = " + std::to_string(mod) +
                  " is outside the summable region (radius " +
                  std::to_string(radius) + ")");
}

/// The k-th series term.
inline SeriesTerm<std::complex<double>> wright_term(const WrightParams& params,
                                                    std::complex<double> z,
                                                    std::size_t k) {
  SeriesTerm<std::complex<double>> out;
  const double kd = double(k);
  detail::LogProduct lp;
  for (const auto& u : params.upper) {
    const std::complex<double> arg = u.a + u.alpha * kd;
    if (detail::on_real_pole(arg)) {
      throw Error(ErrorKind::NumeratorPole,
                  "wright: numerator gamma pole at k = " + std::to_string(k));
    }
    lp.mul_gamma(arg, 1);
  }
  for (const auto& l : params.lower) {
    const std::complex<double> arg = l.a + l.alpha * kd;
    if (detail::on_real_pole(arg)) {
      out.pole_zero = true;
      return out;
    }
    lp.mul_gamma(arg, -1);
  }
  lp.mul_gamma(kd + 1.0, -1);
  if (k > 0) {
    if (z == std::complex<double>{}) return out;
    const double mod = std::abs(z);
    lp.log_mag += kd * std::log(mod);
    lp.error_scale += std::abs(kd * std::log(mod));
    if (z.imag() == 0.0) {
      if (z.real() < 0.0 && (k % 2 == 1)) lp.phase = -lp.phase;
    } else {
      lp.phase *= std::polar(1.0, kd * std::arg(z));
      lp.error_scale += std::abs(kd * std::arg(z));
    }
  }
  out.value = std::exp(lp.log_mag) * lp.phase;
  out.rel_error = detail::kEps * (4.0 + lp.error_scale);
  return out;
}

inline SeriesResult<std::complex<double>> eval_wright(
    const WrightParams& params, std::complex<double> z,
    const SeriesOptions& opts = {}) {
  const SummationMode mode = check_convergence(params, z);
  auto term = [&](std::size_t k) { return wright_term(params, z, k); };
  if (mode == SummationMode::Boundary) {
    return sum_series_levin<std::complex<double>>(term, opts);
  }
  return sum_series<std::complex<double>>(term, opts);
}

}  // namespace gtsf
