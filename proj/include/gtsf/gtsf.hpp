#pragma once

// Generalized Galue-type Struve function
//
//   W(z) = sum_k (-c)^k / [Gamma(lambda k + mu) Gamma(a k + p/xi + (b+2)/2)]
//            (z/2)^(2k+p+1)
//
// evaluated as (z/2)^(p+1) times the Wright series
//   1Psi2[(1,1); (mu,lambda), (p/xi + (b+2)/2, a) | -c z^2 / 4],
// since Gamma(1 + k) / k! = 1.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "gtsf/errors.hpp"
#include "gtsf/quadrature.hpp"
#include "gtsf/scalar_special.hpp"
#include "gtsf/wright.hpp"

namespace gtsf {

struct GtsfParams {
  int a = 1;
  double p = 0.0;
  double b = 1.0;
  double c = 1.0;
  double lambda = 1.0;
  double mu = 1.5;
  double xi = 1.0;

  friend bool operator==(const GtsfParams&, const GtsfParams&) = default;
};

/// Parameters of the classical-Struve-like reduction H_{p,b,c}.
inline GtsfParams reduced_params(double p, double b, double c) {
  return GtsfParams{1, p, b, c, 1.0, 1.5, 1.0};
}

inline void validate(const GtsfParams& params) {
  if (params.a < 1) {
    throw Error(ErrorKind::Domain, "gtsf: a must be a positive integer");
  }
  if (!(params.lambda > 0.0)) {
    throw Error(ErrorKind::Domain, "gtsf: lambda must be positive");
  }
  if (!(params.xi > 0.0)) {
    throw Error(ErrorKind::Domain, "gtsf: xi must be positive");
  }
  for (double v : {params.p, params.b, params.c, params.mu}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::Domain, "gtsf: parameters must be finite");
    }
  }
}

/// Second lower gamma offset p/xi + (b + 2)/2.
inline double second_lower_offset(const GtsfParams& params) {
  return params.p / params.xi + 0.5 * (params.b + 2.0);
}

inline WrightParams inner_wright_params(const GtsfParams& params) {
  return WrightParams{
      {{1.0, 1.0}},
      {{params.mu, params.lambda},
       {second_lower_offset(params), double(params.a)}}};
}

inline double inner_argument(const GtsfParams& params, double z) {
  return -params.c * z * z / 4.0;
}

/// The Wright series without the (z/2)^(p+1) prefactor.
inline SeriesResult<double> eval_gtsf_inner(const GtsfParams& params, double z,
                                            const SeriesOptions& opts = {}) {
  validate(params);
  const auto r =
      eval_wright(inner_wright_params(params), inner_argument(params, z), opts);
  SeriesResult<double> out;
  out.value = r.value.real();
  out.terms_used = r.terms_used;
  out.tail_estimate = r.tail_estimate;
  out.boundary_summation = r.boundary_summation;
  out.term_magnitudes = r.term_magnitudes;
  return out;
}

inline SeriesResult<double> eval_gtsf(const GtsfParams& params, double z,
                                      const SeriesOptions& opts = {}) {
  validate(params);
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw Error(ErrorKind::Domain, "gtsf: argument must be finite and >= 0");
  }
  if (z == 0.0) {
    if (!(params.p > -1.0)) {
      throw Error(ErrorKind::Domain, "gtsf: z = 0 requires p > -1");
    }
    SeriesResult<double> zero;
    zero.terms_used = 1;
    return zero;
  }
  auto out = eval_gtsf_inner(params, z, opts);
  const double scale = std::pow(0.5 * z, params.p + 1.0);
  out.value *= scale;
  out.tail_estimate *= scale;
  return out;
}

inline SeriesResult<double> eval_h_pbc(double p, double b, double c, double z,
                                       const SeriesOptions& opts = {}) {
  return eval_gtsf(reduced_params(p, b, c), z, opts);
}

namespace detail {

// Struve H_nu(y) for large y: Y_nu(y) plus the asymptotic expansion of
// H_nu - Y_nu, truncated at its smallest term.
inline double struve_h_large(double nu, double y) {
  double bessel_y = 0.0;
  if (nu >= 0.0) {
    bessel_y = std::cyl_neumann(nu, y);
  } else {
    const double m = -nu;
    bessel_y = std::cos(m * std::numbers::pi) * std::cyl_neumann(m, y) +
               std::sin(m * std::numbers::pi) * std::cyl_bessel_j(m, y);
  }
  const double half = 0.5 * y;
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int m = 0; m < 200; ++m) {
    const double coeff = special::recip_gamma(nu + 0.5 - m);
    const double term = std::exp(special::log_gamma(m + 0.5) +
                                 (nu - 2.0 * m - 1.0) * std::log(half)) *
                        coeff;
    const double mag = std::abs(term);
    if (coeff != 0.0 && mag > prev) break;
    sum += term;
    if (coeff != 0.0) prev = mag;
    if (mag <= 1e-17 * std::abs(sum) && m > 2) break;
  }
  return bessel_y + sum / std::numbers::pi;
}

inline constexpr int kPoissonNodes = 64;

// Poisson integral, nu > -1/2:
//   H_nu(y) = 2 (y/2)^nu / (sqrt(pi) Gamma(nu + 1/2))
//             int_0^1 (1 - t^2)^(nu - 1/2) sin(y t) dt
inline double struve_h_poisson(double nu, double y) {
  const double alpha = nu - 0.5;
  thread_local double cached_alpha = std::numeric_limits<double>::quiet_NaN();
  thread_local quad::QuadratureRule rule;
  if (!(alpha == cached_alpha)) {
    rule = quad::gauss_jacobi(kPoissonNodes, 0.0, alpha);
    cached_alpha = alpha;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = 0.5 * (1.0 + rule.nodes[i]);
    acc += rule.weights[i] * std::pow(1.0 + t, alpha) * std::sin(y * t);
  }
  const double integral = std::pow(2.0, -alpha - 1.0) * acc;
  return 2.0 * std::pow(0.5 * y, nu) * special::recip_gamma(nu + 0.5) * integral /
         std::sqrt(std::numbers::pi);
}

}  // namespace detail

/// Beyond this value of sqrt(c) z the Struve-reducible case switches to the
/// large-argument expansion.
inline constexpr double kLargeArgumentSwitch = 30.0;

/// Between this value of sqrt(c) z and kLargeArgumentSwitch the
/// Struve-reducible case with nu > -1/2 uses the Poisson integral.
inline constexpr double kPoissonSwitch = 4.0;

/// True when the parameters make the function a rescaled classical Struve
/// H_nu with nu = p/xi + b/2 - 1/2 (lambda = a = 1, mu = 3/2, c > 0).
inline bool struve_reducible(const GtsfParams& params) {
  return params.a == 1 && params.lambda == 1.0 && params.mu == 1.5 &&
         params.c > 0.0;
}

/// Wide-range evaluation used inside integrands. Identical to eval_gtsf
/// except that Struve-reducible parameters switch to the Poisson integral and
/// then the large-argument expansion where the alternating power series
/// loses its digits.
inline double eval_gtsf_wide(const GtsfParams& params, double z) {
  if (struve_reducible(params) && z > 0.0) {
    const double y = std::sqrt(params.c) * z;
    const double nu = params.p / params.xi + 0.5 * params.b - 0.5;
    const bool poisson = y >= kPoissonSwitch && nu > -0.5;
    if (y >= kLargeArgumentSwitch || poisson) {
      // W(z) = (z/2)^(p+1) (y/2)^(-nu-1) H_nu(y)
      const double log_scale =
          (params.p + 1.0) * std::log(0.5 * z) - (nu + 1.0) * std::log(0.5 * y);
      const double h = y >= kLargeArgumentSwitch ? detail::struve_h_large(nu, y)
                                                 : detail::struve_h_poisson(nu, y);
      return std::exp(log_scale) * h;
    }
  }
  return eval_gtsf(params, z).value;
}

}  // namespace gtsf
