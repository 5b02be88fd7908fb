#pragma once

// Integral-transform identities of the generalized Galue-type Struve function.
//
// Every transform is computed twice: the left-hand side by direct quadrature
// of the defining integral, and the right-hand side as the closed-form Wright
// series. verify() compares the two.
//
// Conventions used throughout (G is the GTSF, P = (sqrt(x)/2)^(p+1),
// q = p/xi + b/2 + 1):
//
//   Euler       int_0^1 z^(r-1) (1-z)^(s-1) G(sqrt(x) z) dz
//                 = P Gamma(s) 2Psi3[(p+r+1,2),(1,1); (mu,lambda),(q,a),
//                                    (p+r+s+1,2) | -cx/4]
//   Laplace     int_0^inf e^(-s t) G(sqrt(x) t) dt
//                 = P s^-(p+2) 2Psi2[(p+2,2),(1,1); (mu,lambda),(q,a)
//                                    | -cx/(4 s^2)]
//   Whittaker   int_0^inf t^(zeta-1) e^(-t/2) W_{tau,omega}(t) G(sqrt(x) t) dt
//                 = P 3Psi3[(omega+zeta+p+3/2,2),(-omega+zeta+p+3/2,2),(1,1);
//                           (mu,lambda),(q,a),(-tau+zeta+p+2,2) | -cx/4]
//   K           int_0^inf t^(rho-1) K_nu(omega t) G(sqrt(x) t) dt
//                 = 2^(rho+p-1) omega^-(rho+p+1) P
//                   3Psi2[((rho+p+nu+1)/2,1),((rho+p-nu+1)/2,1),(1,1);
//                         (mu,lambda),(q,a) | -cx/omega^2]
//   Fractional Fourier (order zeta, frequency Omega = omega^(1/zeta))
//               lim_{eps->0+} int_0^inf e^{(i Omega - eps) t} G(sqrt(x) t) dt
//                 = Laplace right-hand side continued to s = -i Omega.
//               The term-wise series with factors
//               1 / (i^(2k+p+2) Omega^(2k+p+2) (-1)^(2k+p+1)) differs from
//               that continuation by the constant -exp(-2 pi i p).

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gtsf/errors.hpp"
#include "gtsf/gtsf.hpp"
#include "gtsf/kernels.hpp"
#include "gtsf/quadrature.hpp"
#include "gtsf/scalar_special.hpp"
#include "gtsf/wright.hpp"

namespace gtsf::identities {

using Complex = std::complex<double>;

enum class Theorem { Euler, Laplace, Whittaker, KTransform, FracFourier };

inline constexpr const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::Euler: return "euler";
    case Theorem::Laplace: return "laplace";
    case Theorem::Whittaker: return "whittaker";
    case Theorem::KTransform: return "ktransform";
    case Theorem::FracFourier: return "frft";
  }
  return "unknown";
}

inline std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::Euler, Theorem::Laplace, Theorem::Whittaker,
                    Theorem::KTransform, Theorem::FracFourier}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

struct EulerArgs {
  double r = 2.0;
  double s = 3.0;
  friend bool operator==(const EulerArgs&, const EulerArgs&) = default;
};
struct LaplaceArgs {
  double s = 3.0;
  friend bool operator==(const LaplaceArgs&, const LaplaceArgs&) = default;
};
struct WhittakerArgs {
  double zeta = 1.5;
  double tau = 0.2;
  double omega = 0.3;
  friend bool operator==(const WhittakerArgs&, const WhittakerArgs&) = default;
};
struct KTransformArgs {
  double rho = 1.5;
  double nu = 0.3;
  double omega = 2.0;
  friend bool operator==(const KTransformArgs&, const KTransformArgs&) = default;
};
struct FracFourierArgs {
  double order = 1.0;
  double omega = 1.0;
  friend bool operator==(const FracFourierArgs&, const FracFourierArgs&) = default;
};

using TransformArgs =
    std::variant<EulerArgs, LaplaceArgs, WhittakerArgs, KTransformArgs, FracFourierArgs>;

struct TransformCase {
  GtsfParams gtsf;
  double x = 1.0;
  TransformArgs args;

  Theorem theorem() const { return static_cast<Theorem>(args.index()); }
  friend bool operator==(const TransformCase&, const TransformCase&) = default;
};

/// Reference case per theorem: reduced GTSF set with p = 1/2 (p = 0 and
/// x = 1/4 for the fractional Fourier transform).
inline TransformCase canonical_case(Theorem t) {
  TransformCase c{reduced_params(0.5, 1.0, 1.0), 1.0, EulerArgs{}};
  switch (t) {
    case Theorem::Euler: c.args = EulerArgs{}; break;
    case Theorem::Laplace: c.args = LaplaceArgs{}; break;
    case Theorem::Whittaker: c.args = WhittakerArgs{}; break;
    case Theorem::KTransform: c.args = KTransformArgs{}; break;
    case Theorem::FracFourier:
      c.gtsf.p = 0.0;
      c.x = 0.25;
      c.args = FracFourierArgs{};
      break;
  }
  return c;
}

inline double default_tolerance(Theorem t) {
  switch (t) {
    case Theorem::Euler:
    case Theorem::Laplace: return 1e-8;
    case Theorem::Whittaker:
    case Theorem::KTransform: return 1e-6;
    case Theorem::FracFourier: return 1e-5;
  }
  return 1e-8;
}

/// Residuals at or below this are a pass regardless of the relative residual.
inline constexpr double kAbsoluteFloor = 1e-14;

/// Required excess of the damping rate over sqrt(|c| x) when c < 0.
inline constexpr double kDampingMargin = 0.5;

inline constexpr const char* kMarginViolated = "convergence margin violated";

/// What the integrand uses in place of G(sqrt(x) t).
enum class IntegrandMode {
  Gtsf,         // the function itself
  Unit,         // the constant 1
  LeadingTerm,  // its k = 0 term, P t^(p+1) / (Gamma(mu) Gamma(q))
};

struct VerifyOptions {
  std::optional<double> tol;
  std::vector<double> frft_eps{0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
  SeriesOptions series{};
};

inline double prefactor(const TransformCase& c) {
  return std::pow(0.5 * std::sqrt(c.x), c.gtsf.p + 1.0);
}

inline double growth_rate(const TransformCase& c) {
  return std::sqrt(std::max(0.0, -c.gtsf.c) * c.x);
}

/// Reason the case cannot be verified, or nullopt when it is valid.
inline std::optional<std::string> precondition_failure(const TransformCase& c) {
  try {
    validate(c.gtsf);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  if (!(c.x > 0.0) || !std::isfinite(c.x)) return "x must be positive";
  if (!(c.gtsf.p > -1.0)) return "p must exceed -1";
  const double p = c.gtsf.p;
  const double growth = growth_rate(c);
  return std::visit(
      [&](const auto& a) -> std::optional<std::string> {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, EulerArgs>) {
          if (!(a.r > 0.0) || !(a.s > 0.0)) return "euler: r and s must be positive";
        } else if constexpr (std::is_same_v<A, LaplaceArgs>) {
          if (!(a.s > growth + kDampingMargin)) return kMarginViolated;
        } else if constexpr (std::is_same_v<A, WhittakerArgs>) {
          if (!(a.zeta + a.omega + p + 1.5 > 0.0) || !(a.zeta - a.omega + p + 1.5 > 0.0)) {
            return "whittaker: zeta +- omega + p + 3/2 must be positive";
          }
          if (!(1.0 > growth + kDampingMargin)) return kMarginViolated;
        } else if constexpr (std::is_same_v<A, KTransformArgs>) {
          if (!(a.omega > 0.0)) return "ktransform: omega must be positive";
          if (!(a.rho + p + 1.0 + a.nu > 0.0) || !(a.rho + p + 1.0 - a.nu > 0.0)) {
            return "ktransform: rho + p + 1 +- nu must be positive";
          }
          if (!(a.omega > growth + kDampingMargin)) return kMarginViolated;
        } else {
          if (!(a.order > 0.0) || !(a.order <= 1.0)) return "frft: order must lie in (0, 1]";
          if (!(a.omega > 0.0)) return "frft: omega must be positive";
          if (c.gtsf.c < 0.0) {
            return "frft: regularized integral diverges for growing integrands (c < 0)";
          }
        }
        return std::nullopt;
      },
      c.args);
}

template <class A>
const A& args_as(const TransformCase& c) {
  const A* a = std::get_if<A>(&c.args);
  if (!a) throw Error(ErrorKind::InvalidCase, "transform case has the wrong variant");
  return *a;
}

// ---------------------------------------------------------------------------
// Right-hand sides

inline WrightParams euler_wright_params(const TransformCase& c) {
  const auto& e = args_as<EulerArgs>(c);
  const auto& g = c.gtsf;
  const double p = g.p;
  return {{{p + e.r + 1.0, 2.0}, {1.0, 1.0}},
          {{g.mu, g.lambda}, {second_lower_offset(g), double(g.a)}, {p + e.r + e.s + 1.0, 2.0}}};
}

inline WrightParams laplace_wright_params(const GtsfParams& g) {
  return {{{g.p + 2.0, 2.0}, {1.0, 1.0}},
          {{g.mu, g.lambda}, {second_lower_offset(g), double(g.a)}}};
}

inline WrightParams whittaker_wright_params(const TransformCase& c) {
  const auto& w = args_as<WhittakerArgs>(c);
  const auto& g = c.gtsf;
  const double p = g.p;
  return {{{w.omega + w.zeta + p + 1.5, 2.0}, {-w.omega + w.zeta + p + 1.5, 2.0}, {1.0, 1.0}},
          {{g.mu, g.lambda}, {second_lower_offset(g), double(g.a)}, {-w.tau + w.zeta + p + 2.0, 2.0}}};
}

inline WrightParams ktransform_wright_params(const TransformCase& c) {
  const auto& k = args_as<KTransformArgs>(c);
  const auto& g = c.gtsf;
  const double p = g.p;
  return {{{(k.rho + p + k.nu + 1.0) / 2.0, 1.0}, {(k.rho + p - k.nu + 1.0) / 2.0, 1.0}, {1.0, 1.0}},
          {{g.mu, g.lambda}, {second_lower_offset(g), double(g.a)}}};
}

inline SeriesResult<Complex> scaled(SeriesResult<Complex> r, Complex factor) {
  r.value *= factor;
  r.tail_estimate *= std::abs(factor);
  return r;
}

inline SeriesResult<Complex> rhs_euler(const TransformCase& c, const SeriesOptions& opts = {}) {
  const auto& e = args_as<EulerArgs>(c);
  const double factor = prefactor(c) * special::gamma(e.s);
  return scaled(eval_wright(euler_wright_params(c), -c.gtsf.c * c.x / 4.0, opts), factor);
}

/// Laplace right-hand side at complex s (principal branch of s^-(p+2)).
inline SeriesResult<Complex> laplace_continuation(const GtsfParams& g, double x, Complex s,
                                                  const SeriesOptions& opts = {}) {
  TransformCase c{g, x, LaplaceArgs{}};
  const Complex arg = -g.c * x / (4.0 * s * s);
  const Complex factor = prefactor(c) * std::pow(s, -(g.p + 2.0));
  return scaled(eval_wright(laplace_wright_params(g), arg, opts), factor);
}

inline SeriesResult<Complex> rhs_laplace(const TransformCase& c, const SeriesOptions& opts = {}) {
  return laplace_continuation(c.gtsf, c.x, args_as<LaplaceArgs>(c).s, opts);
}

inline SeriesResult<Complex> rhs_whittaker(const TransformCase& c, const SeriesOptions& opts = {}) {
  return scaled(eval_wright(whittaker_wright_params(c), -c.gtsf.c * c.x / 4.0, opts), prefactor(c));
}

inline double ktransform_prefactor(const TransformCase& c) {
  const auto& k = args_as<KTransformArgs>(c);
  const double p = c.gtsf.p;
  return std::pow(2.0, k.rho + p - 1.0) * std::pow(k.omega, -(k.rho + p + 1.0)) * prefactor(c);
}

inline SeriesResult<Complex> rhs_ktransform(const TransformCase& c, const SeriesOptions& opts = {}) {
  const auto& k = args_as<KTransformArgs>(c);
  return scaled(eval_wright(ktransform_wright_params(c), -c.gtsf.c * c.x / (k.omega * k.omega), opts),
                ktransform_prefactor(c));
}

inline double frft_frequency(const FracFourierArgs& f) { return std::pow(f.omega, 1.0 / f.order); }

/// The term-wise fractional Fourier series, all complex powers on the
/// principal branch.
inline SeriesResult<Complex> rhs_frft(const TransformCase& c, const SeriesOptions& opts = {}) {
  const auto& f = args_as<FracFourierArgs>(c);
  const auto& g = c.gtsf;
  const double p = g.p;
  const double big_omega = frft_frequency(f);
  const double w = -g.c * c.x / 4.0;
  // Same gamma structure and argument modulus as the continued Laplace series.
  const SummationMode mode = check_convergence(
      laplace_wright_params(g), Complex(-w / (big_omega * big_omega)));
  const double pref = prefactor(c);
  const Complex unit_i(0.0, 1.0);
  const Complex minus_one(-1.0, 0.0);
  const double q = second_lower_offset(g);
  auto term = [&](std::size_t k) {
    SeriesTerm<Complex> t;
    const double kd = double(k);
    const double lower1 = g.lambda * kd + g.mu;
    const double lower2 = g.a * kd + q;
    if (special::detail::is_nonpositive_integer(lower1) ||
        special::detail::is_nonpositive_integer(lower2)) {
      t.pole_zero = true;
      return t;
    }
    const auto num = special::log_gamma_signed(2.0 * kd + p + 2.0);
    const auto d1 = special::log_gamma_signed(lower1);
    const auto d2 = special::log_gamma_signed(lower2);
    double log_mag = num.log_abs - d1.log_abs - d2.log_abs;
    double sign = double(num.sign * d1.sign * d2.sign);
    if (k > 0) {
      if (w == 0.0) return t;
      log_mag += kd * std::log(std::abs(w));
      if (w < 0.0 && k % 2 == 1) sign = -sign;
    }
    const double y = 2.0 * kd + p + 2.0;
    const Complex denom = std::pow(unit_i, y) * std::pow(f.omega, y / f.order) *
                          std::pow(minus_one, y - 1.0);
    t.value = pref * sign * std::exp(log_mag) / denom;
    t.rel_error = 1e-16 * (8.0 + std::abs(num.log_abs) + std::abs(d1.log_abs) +
                           std::abs(d2.log_abs) + y);
    return t;
  };
  if (mode == SummationMode::Boundary) return sum_series_levin<Complex>(term, opts);
  return sum_series<Complex>(term, opts);
}

/// Constant ratio between the term-wise fractional Fourier series and the
/// continued Laplace transform: -exp(-2 pi i p).
inline Complex frft_branch_factor(double p) {
  return -std::polar(1.0, -2.0 * std::numbers::pi * p);
}

// ---------------------------------------------------------------------------
// Left-hand sides

namespace detail {

// G(sqrt(x) t) / t^lead and the exponent `lead` that was divided out.
struct GtsfFactor {
  const TransformCase& c;
  IntegrandMode mode;

  double lead() const { return mode == IntegrandMode::Unit ? 0.0 : c.gtsf.p + 1.0; }

  double operator()(double t) const {
    switch (mode) {
      case IntegrandMode::Unit: return 1.0;
      case IntegrandMode::LeadingTerm:
        return prefactor(c) * special::recip_gamma(c.gtsf.mu) *
               special::recip_gamma(second_lower_offset(c.gtsf));
      case IntegrandMode::Gtsf:
        break;
    }
    return eval_gtsf_wide(c.gtsf, std::sqrt(c.x) * t) / std::pow(t, lead());
  }
};

inline quad::QuadratureSpec finite_spec(double rel, double abs) {
  quad::QuadratureSpec s;
  s.kind = quad::QuadratureKind::Finite;
  s.rel_tol = rel;
  s.abs_tol = abs;
  return s;
}

inline quad::QuadratureSpec semi_infinite_spec(double rel, double abs, double left_exponent) {
  quad::QuadratureSpec s;
  s.kind = quad::QuadratureKind::SemiInfinite;
  s.rel_tol = rel;
  s.abs_tol = abs;
  s.endpoint_exponents = {left_exponent, 0.0};
  return s;
}

}  // namespace detail

inline quad::QuadratureResult<Complex> lhs(const TransformCase& c,
                                           IntegrandMode mode = IntegrandMode::Gtsf,
                                           const VerifyOptions& opts = {}) {
  if (auto why = precondition_failure(c)) throw Error(ErrorKind::InvalidCase, *why);
  const detail::GtsfFactor gf{c, mode};
  const double lead = gf.lead();
  const double growth = growth_rate(c);

  auto to_complex = [](const auto& r) {
    quad::QuadratureResult<Complex> out;
    out.value = r.value;
    out.error_estimate = r.error_estimate;
    out.evaluations = r.evaluations;
    out.truncation_used = r.truncation_used;
    return out;
  };

  switch (c.theorem()) {
    case Theorem::Euler: {
      const auto& e = args_as<EulerArgs>(c);
      auto spec = detail::finite_spec(1e-12, 1e-15);
      spec.endpoint_exponents = {e.r - 1.0 + lead, e.s - 1.0};
      return to_complex(quad::integrate_finite(gf, 0.0, 1.0, spec));
    }
    case Theorem::Laplace: {
      const auto& l = args_as<LaplaceArgs>(c);
      auto f = [&](double t) { return std::exp(-l.s * t) * gf(t); };
      return to_complex(quad::integrate_semi_infinite(
          f, l.s - growth, detail::semi_infinite_spec(1e-12, 1e-15, lead)));
    }
    case Theorem::Whittaker: {
      const auto& w = args_as<WhittakerArgs>(c);
      // W_{tau,omega}(t) ~ t^(1/2 - |omega|) at the origin
      const double kernel_lead = 0.5 - std::abs(w.omega);
      auto f = [&](double t) {
        return std::pow(t, -kernel_lead) * std::exp(-0.5 * t) *
               kernels::whittaker_w(w.tau, w.omega, t) * gf(t);
      };
      return to_complex(quad::integrate_semi_infinite(
          f, 1.0 - growth,
          detail::semi_infinite_spec(1e-10, 1e-13, w.zeta - 1.0 + kernel_lead + lead)));
    }
    case Theorem::KTransform: {
      const auto& k = args_as<KTransformArgs>(c);
      const double kernel_lead = -std::abs(k.nu);
      auto f = [&](double t) {
        return std::pow(t, -kernel_lead) * kernels::bessel_k(k.nu, k.omega * t) * gf(t);
      };
      return to_complex(quad::integrate_semi_infinite(
          f, k.omega - growth,
          detail::semi_infinite_spec(1e-10, 1e-13, k.rho - 1.0 + kernel_lead + lead)));
    }
    case Theorem::FracFourier: {
      const auto& fr = args_as<FracFourierArgs>(c);
      auto spec = detail::semi_infinite_spec(1e-10, 1e-10, lead);
      spec.kind = quad::QuadratureKind::RegularizedOscillatory;
      spec.regularization_eps_sequence = opts.frft_eps;
      return quad::integrate_regularized_oscillatory(gf, frft_frequency(fr), spec);
    }
  }
  throw Error(ErrorKind::InvalidCase, "unknown theorem");
}

// ---------------------------------------------------------------------------
// Verification

enum class ReportStatus { Passed, Failed, Invalid };

inline constexpr const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Passed: return "passed";
    case ReportStatus::Failed: return "failed";
    case ReportStatus::Invalid: return "invalid";
  }
  return "unknown";
}

struct VerificationReport {
  TransformCase case_;
  std::optional<Complex> lhs;
  std::optional<Complex> rhs;
  std::optional<double> abs_residual;
  std::optional<double> rel_residual;
  std::optional<double> quad_error;
  std::size_t series_terms = 0;
  bool passed = false;
  std::string notes;
  ReportStatus status = ReportStatus::Failed;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Right-hand side by theorem.
inline SeriesResult<Complex> rhs(const TransformCase& c, const SeriesOptions& opts = {}) {
  switch (c.theorem()) {
    case Theorem::Euler: return rhs_euler(c, opts);
    case Theorem::Laplace: return rhs_laplace(c, opts);
    case Theorem::Whittaker: return rhs_whittaker(c, opts);
    case Theorem::KTransform: return rhs_ktransform(c, opts);
    case Theorem::FracFourier: return rhs_frft(c, opts);
  }
  throw Error(ErrorKind::InvalidCase, "unknown theorem");
}

namespace detail {

inline std::string errata_note(const TransformCase& c) {
  std::ostringstream os;
  os.precision(17);
  switch (c.theorem()) {
    case Theorem::Laplace:
      os << "Wright argument -cx/(4 s^2) used (stated form -cx/(4 s^k)); "
            "evaluated as 2Psi2 (stated 2Psi3 with two lower pairs)";
      break;
    case Theorem::Whittaker:
      os << "enforced zeta +- omega + p + 3/2 > 0 (stated condition Re(e) > |Re(omega)| - 1/2)";
      break;
    case Theorem::KTransform: {
      const auto& k = args_as<KTransformArgs>(c);
      os << "prefactor omega^-(rho+p+1) used (stated omega^(1-rho-p), off by omega^2 = "
         << k.omega * k.omega << ")";
      break;
    }
    default:
      break;
  }
  return os.str();
}

inline void append_note(std::string& notes, const std::string& more) {
  if (more.empty()) return;
  if (!notes.empty()) notes += "; ";
  notes += more;
}

}  // namespace detail

inline VerificationReport verify(const TransformCase& c, const VerifyOptions& opts = {}) {
  VerificationReport rep;
  rep.case_ = c;
  const double tol = opts.tol.value_or(default_tolerance(c.theorem()));
  if (auto why = precondition_failure(c)) {
    rep.status = ReportStatus::Invalid;
    rep.notes = *why;
    return rep;
  }
  SeriesResult<Complex> right;
  try {
    right = rhs(c, opts.series);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConvergenceViolation) {
      rep.status = ReportStatus::Invalid;
    } else {
      rep.status = ReportStatus::Failed;
    }
    rep.notes = std::string(to_string(e.kind())) + ": " + e.what();
    return rep;
  }
  rep.rhs = right.value;
  rep.series_terms = right.terms_used;
  detail::append_note(rep.notes, detail::errata_note(c));
  if (right.boundary_summation) {
    detail::append_note(rep.notes, "Wright series summed on its circle of convergence (Levin)");
  }

  quad::QuadratureResult<Complex> left;
  try {
    left = lhs(c, IntegrandMode::Gtsf, opts);
  } catch (const Error& e) {
    rep.status = ReportStatus::Failed;
    detail::append_note(rep.notes, std::string(to_string(e.kind())) + ": " + e.what());
    return rep;
  }
  rep.lhs = left.value;
  rep.quad_error = left.error_estimate;

  Complex reference = right.value;
  if (c.theorem() == Theorem::FracFourier) {
    const auto& f = args_as<FracFourierArgs>(c);
    const Complex analytic = frft_branch_factor(c.gtsf.p);
    const auto cont = laplace_continuation(c.gtsf, c.x, Complex(0.0, -frft_frequency(f)), opts.series);
    const Complex measured = right.value / cont.value;
    std::ostringstream os;
    os.precision(17);
    os << "term-wise series = factor x regularized transform; factor -exp(-2 pi i p) = ("
       << analytic.real() << ", " << analytic.imag() << "), measured (" << measured.real()
       << ", " << measured.imag() << ")";
    detail::append_note(rep.notes, os.str());
    reference = right.value / analytic;
  }
  const double abs_res = std::abs(left.value - reference);
  const double scale = std::abs(reference);
  rep.abs_residual = abs_res;
  rep.rel_residual = scale > 0.0 ? abs_res / scale : abs_res;
  rep.passed = *rep.rel_residual <= tol || abs_res <= kAbsoluteFloor;
  rep.status = rep.passed ? ReportStatus::Passed : ReportStatus::Failed;
  return rep;
}

}  // namespace gtsf::identities
