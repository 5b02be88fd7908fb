#pragma once

// Adaptive quadrature for the transform integrals.
//
// integrate_finite      global adaptive bisection on [a, b]; panels touching
//                       an endpoint use Gauss-Jacobi nodes with the weight
//                       (t - a)^alpha or (b - t)^beta absorbed.
// integrate_semi_infinite
//                       [0, T] with T found from sampled envelope decay,
//                       checked by integrating [T, 2T].
// integrate_regularized_oscillatory
//                       lim_{eps -> 0+} int_0^inf e^{(i w - eps) t} g(t) dt by
//                       Neville extrapolation in eps.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gtsf/errors.hpp"
#include "gtsf/scalar_special.hpp"

namespace gtsf::quad {

enum class QuadratureKind { Finite, SemiInfinite, RegularizedOscillatory };

struct QuadratureSpec {
  QuadratureKind kind = QuadratureKind::Finite;
  // Exponents of (t - a) and (b - t) carried by the weight. For semi-infinite
  // integrals only the first (at t = 0) is used.
  std::pair<double, double> endpoint_exponents{0.0, 0.0};
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  std::size_t max_subdivisions = 4000;
  std::optional<double> truncation_point;
  std::vector<double> regularization_eps_sequence{0.2, 0.1, 0.05, 0.025};
  int panel_points = 15;
};

template <class V>
struct QuadratureResult {
  V value{};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  std::optional<double> truncation_used;
};

/// Nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1 + x)^left (1 - x)^right on [-1, 1],
/// computed by Golub-Welsch from the three-term recurrence.
inline QuadratureRule gauss_jacobi(int n, double left, double right) {
  if (n < 1) throw Error(ErrorKind::Domain, "gauss_jacobi: n must be >= 1");
  if (!(left > -1.0) || !(right > -1.0)) {
    throw Error(ErrorKind::Domain, "gauss_jacobi: exponents must exceed -1");
  }
  // Standard Jacobi P^{(a,b)} has weight (1-x)^a (1+x)^b.
  const double a = right;
  const double b = left;
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta = 0.0;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) /
             (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + special::log_gamma(a + 1.0) +
                              special::log_gamma(b + 1.0) - special::log_gamma(ab + 2.0));
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

inline QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

namespace detail {

template <class V>
double magnitude(const V& v) {
  return std::abs(v);
}

template <class F>
using value_t = std::decay_t<std::invoke_result_t<F&, double>>;

// Absorbed-weight rules for one integration problem.
class PanelRules {
 public:
  PanelRules(int n, double left_exp, double right_exp)
      : left_exp_(left_exp), right_exp_(right_exp), plain_(gauss_legendre(n)) {
    if (left_exp != 0.0) left_ = gauss_jacobi(n, left_exp, 0.0);
    if (right_exp != 0.0) right_ = gauss_jacobi(n, 0.0, right_exp);
    if (left_exp != 0.0 || right_exp != 0.0) both_ = gauss_jacobi(n, left_exp, right_exp);
  }

  // Integral of (t-a)^alpha (b-t)^beta f(t) over [lo, hi] within [a, b].
  template <class F>
  auto apply(F& f, double a, double b, double lo, double hi,
             std::size_t& evals) const -> value_t<F> {
    using V = value_t<F>;
    const bool at_left = (lo == a) && left_exp_ != 0.0;
    const bool at_right = (hi == b) && right_exp_ != 0.0;
    const QuadratureRule* rule = &plain_;
    double power = 1.0;
    if (at_left && at_right) {
      rule = &*both_;
      power = left_exp_ + right_exp_ + 1.0;
    } else if (at_left) {
      rule = &*left_;
      power = left_exp_ + 1.0;
    } else if (at_right) {
      rule = &*right_;
      power = right_exp_ + 1.0;
    }
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    V acc{};
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      const double t = mid + half * rule->nodes[i];
      double w = rule->weights[i];
      if (!at_left && left_exp_ != 0.0) w *= std::pow(t - a, left_exp_);
      if (!at_right && right_exp_ != 0.0) w *= std::pow(b - t, right_exp_);
      acc += w * f(t);
    }
    evals += rule->nodes.size();
    return std::pow(half, power) * acc;
  }

 private:
  double left_exp_;
  double right_exp_;
  QuadratureRule plain_;
  std::optional<QuadratureRule> left_;
  std::optional<QuadratureRule> right_;
  std::optional<QuadratureRule> both_;
};

}  // namespace detail

template <class F>
auto integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec)
    -> QuadratureResult<detail::value_t<F>> {
  using V = detail::value_t<F>;
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::Domain, "integrate_finite: need finite a < b");
  }
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0) || spec.max_subdivisions < 1) {
    throw Error(ErrorKind::Domain, "integrate_finite: invalid tolerances");
  }
  const auto [ea, eb] = spec.endpoint_exponents;
  const detail::PanelRules rules(spec.panel_points, ea, eb);

  struct Panel {
    double lo, hi;
    V left, right;
    V fine;
    double err;
  };
  std::vector<Panel> panels;
  QuadratureResult<V> out;
  std::size_t& evals = out.evaluations;

  auto make_panel = [&](double lo, double hi, const V& coarse) {
    const double mid = 0.5 * (lo + hi);
    const V left = rules.apply(f, a, b, lo, mid, evals);
    const V right = rules.apply(f, a, b, mid, hi, evals);
    const V fine = left + right;
    return Panel{lo, hi, left, right, fine, detail::magnitude(V(fine - coarse))};
  };
  auto cmp = [&](std::size_t i, std::size_t j) { return panels[i].err < panels[j].err; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> worst(cmp);

  const V whole = rules.apply(f, a, b, a, b, evals);
  panels.push_back(make_panel(a, b, whole));
  worst.push(0);

  std::size_t subdivisions = 0;
  while (true) {
    V total{};
    double err = 0.0;
    double abs_sum = 0.0;
    for (const auto& p : panels) {
      total += p.fine;
      err += p.err;
      abs_sum += detail::magnitude(p.fine);
    }
    const double target =
        std::max({spec.abs_tol, spec.rel_tol * detail::magnitude(total),
                  64.0 * std::numeric_limits<double>::epsilon() * abs_sum});
    if (!std::isfinite(detail::magnitude(total))) {
      throw Error(ErrorKind::Domain, "integrate_finite: integrand is not finite");
    }
    if (err <= target) {
      out.value = total;
      out.error_estimate = err;
      return out;
    }
    if (subdivisions >= spec.max_subdivisions) {
      throw Error(ErrorKind::MaxSubdivisions,
                  "integrate_finite: no convergence after " +
                      std::to_string(subdivisions) + " subdivisions (error " +
                      std::to_string(err) + ")");
    }
    const std::size_t idx = worst.top();
    worst.pop();
    const Panel parent = panels[idx];
    const double mid = 0.5 * (parent.lo + parent.hi);
    // The children's coarse values are the parent's half-panel values.
    panels[idx] = make_panel(parent.lo, mid, parent.left);
    panels.push_back(make_panel(mid, parent.hi, parent.right));
    worst.push(idx);
    worst.push(panels.size() - 1);
    ++subdivisions;
  }
}

namespace detail {

// Largest sampled |f| on [t0, t1].
template <class F>
double sampled_envelope(F& f, double t0, double t1, std::size_t& evals) {
  constexpr int samples = 24;
  double m = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = t0 + (t1 - t0) * i / samples;
    m = std::max(m, magnitude(f(t)));
    ++evals;
  }
  return m;
}

}  // namespace detail

/// f is the integrand without the t^alpha endpoint weight given by
/// spec.endpoint_exponents.first.
template <class F>
auto integrate_semi_infinite(F&& f, double decay_rate_hint, const QuadratureSpec& spec)
    -> QuadratureResult<detail::value_t<F>> {
  using V = detail::value_t<F>;
  if (!(decay_rate_hint > 0.0)) {
    throw Error(ErrorKind::Domain, "integrate_semi_infinite: decay hint must be positive");
  }
  const double alpha = spec.endpoint_exponents.first;
  auto weighted = [&](double t) -> V {
    return alpha == 0.0 ? V(f(t)) : V(std::pow(t, alpha) * f(t));
  };
  std::size_t evals = 0;
  double T = 0.0;
  double envelope = 0.0;
  if (spec.truncation_point) {
    T = *spec.truncation_point;
    if (!(T > 0.0)) throw Error(ErrorKind::Domain, "truncation point must be positive");
    envelope = detail::sampled_envelope(weighted, T, 2.0 * T, evals) / decay_rate_hint;
  } else {
    T = std::max(1.0, 4.0 / decay_rate_hint);
    const double t_max = 1e4 / decay_rate_hint;
    while (true) {
      envelope = detail::sampled_envelope(weighted, T, 2.0 * T, evals) / decay_rate_hint;
      if (envelope < spec.abs_tol / 10.0) break;
      T *= 1.5;
      if (T > t_max) {
        throw Error(ErrorKind::TruncationUnstable,
                    "integrate_semi_infinite: envelope did not decay by t = " +
                        std::to_string(t_max));
      }
    }
  }
  QuadratureSpec head_spec = spec;
  head_spec.endpoint_exponents = {alpha, 0.0};
  const auto head = integrate_finite(f, 0.0, T, head_spec);
  QuadratureSpec tail_spec = spec;
  tail_spec.endpoint_exponents = {0.0, 0.0};
  const auto tail = integrate_finite(weighted, T, 2.0 * T, tail_spec);
  const double allowed =
      std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(head.value));
  if (detail::magnitude(tail.value) > allowed) {
    throw Error(ErrorKind::TruncationUnstable,
                "integrate_semi_infinite: [T, 2T] contributes " +
                    std::to_string(detail::magnitude(tail.value)) + " at T = " +
                    std::to_string(T));
  }
  QuadratureResult<V> out;
  out.value = head.value + tail.value;
  out.error_estimate = head.error_estimate + tail.error_estimate +
                       envelope * std::exp(-decay_rate_hint * T);
  out.evaluations = evals + head.evaluations + tail.evaluations;
  out.truncation_used = 2.0 * T;
  return out;
}

/// Polynomial (Neville) extrapolation of samples (h_i, v_i) to h = 0.
/// Returns the extrapolant through all points and the successive changes of
/// the leading extrapolants P_{0..m}.
template <class V>
std::pair<V, std::vector<double>> neville_to_zero(const std::vector<double>& h,
                                                  const std::vector<V>& v) {
  const std::size_t n = h.size();
  std::vector<V> table = v;
  std::vector<V> leading{v[0]};
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      table[i] = (h[i] * table[i + 1] - h[i + m] * table[i]) / (h[i] - h[i + m]);
    }
    leading.push_back(table[0]);
  }
  std::vector<double> steps;
  for (std::size_t m = 1; m < leading.size(); ++m) {
    steps.push_back(std::abs(leading[m] - leading[m - 1]));
  }
  return {table[0], steps};
}

/// g is the non-oscillatory factor without the t^alpha endpoint weight.
template <class G>
QuadratureResult<std::complex<double>> integrate_regularized_oscillatory(
    G&& g, double frequency, const QuadratureSpec& spec) {
  if (frequency == 0.0 || !std::isfinite(frequency)) {
    throw Error(ErrorKind::Domain, "regularized oscillatory: frequency must be nonzero");
  }
  const auto& eps = spec.regularization_eps_sequence;
  if (eps.size() < 2) {
    throw Error(ErrorKind::Domain, "regularized oscillatory: need at least two eps values");
  }
  std::vector<std::complex<double>> values;
  QuadratureResult<std::complex<double>> out;
  double quad_err = 0.0;
  for (double e : eps) {
    if (!(e > 0.0)) throw Error(ErrorKind::Domain, "regularization eps must be positive");
    const std::complex<double> rate(-e, frequency);
    auto damped = [&](double t) -> std::complex<double> {
      return std::exp(rate * t) * g(t);
    };
    const auto r = integrate_semi_infinite(damped, e, spec);
    values.push_back(r.value);
    quad_err = std::max(quad_err, r.error_estimate);
    out.evaluations += r.evaluations;
    out.truncation_used = r.truncation_used;
  }
  const auto [value, steps] = neville_to_zero(eps, values);
  const double floor = std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
  if (steps.size() >= 2 && steps.back() > steps[steps.size() - 2] &&
      steps.back() > floor) {
    throw Error(ErrorKind::ExtrapolationDiverged,
                "regularized oscillatory: extrapolants stopped contracting");
  }
  out.value = value;
  out.error_estimate = steps.back() + quad_err;
  return out;
}

}  // namespace gtsf::quad
