#pragma once

// Summation drivers shared by every power series in the library.
//
// Direct summation stops once |term_k| <= tol * |partial sum| holds for three
// consecutive k. Terms that vanish because of a reciprocal-gamma pole do not
// count towards that run, otherwise a lattice of denominator poles could stop
// the sum before the first nonzero term.
//
// Boundary summation applies the Levin u-transform to the partial sums. It is
// used on the circle of convergence, where the terms no longer decay but the
// function is analytic (alternating-sign boundary points).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gtsf/errors.hpp"

namespace gtsf {

struct SeriesOptions {
  double tol = 1e-12;
  std::size_t max_terms = 10000;
  bool record_terms = false;
};

template <class V>
struct SeriesResult {
  V value{};
  std::size_t terms_used = 0;
  // Bound on |true sum - value|: truncation remainder plus accumulated
  // rounding of the terms that were added.
  double tail_estimate = 0.0;
  bool boundary_summation = false;
  std::vector<double> term_magnitudes;
};

// One series term as produced by a term generator.
template <class V>
struct SeriesTerm {
  V value{};
  // Estimated relative error of `value` (log-space evaluation error).
  double rel_error = 0.0;
  // True when the term is zero because a denominator gamma sits on a pole.
  bool pole_zero = false;
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier compensated accumulator, component-wise for complex values.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <class V>
class Accumulator;

template <>
class Accumulator<double> {
 public:
  void add(double x) noexcept { re_.add(x); }
  double value() const noexcept { return re_.value(); }

 private:
  CompensatedSum re_;
};

template <>
class Accumulator<std::complex<double>> {
 public:
  void add(std::complex<double> x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> value() const noexcept {
    return {re_.value(), im_.value()};
  }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace detail

template <class V, class TermFn>
SeriesResult<V> sum_series(TermFn&& term_at, const SeriesOptions& opts) {
  if (!(opts.tol > 0.0)) {
    throw Error(ErrorKind::Domain, "series: tol must be positive");
  }
  SeriesResult<V> out;
  detail::Accumulator<V> acc;
  double rounding = 0.0;
  double abs_total = 0.0;
  double prev_mag = -1.0;
  std::vector<double> ratios;
  int small_run = 0;
  double last_mag = 0.0;

  for (std::size_t k = 0; k < opts.max_terms; ++k) {
    const SeriesTerm<V> t = term_at(k);
    const double mag = std::abs(t.value);
    if (!std::isfinite(mag)) {
      throw Error(ErrorKind::NonConvergence,
                  "series: term " + std::to_string(k) + " is not finite");
    }
    acc.add(t.value);
    abs_total += mag;
    rounding += mag * t.rel_error;
    if (opts.record_terms) out.term_magnitudes.push_back(mag);
    if (t.pole_zero) continue;

    if (prev_mag > 0.0 && mag > 0.0) ratios.push_back(mag / prev_mag);
    prev_mag = mag;
    last_mag = mag;

    const double sum_mag = std::abs(acc.value());
    if (mag <= opts.tol * sum_mag) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run >= 3) {
      out.value = acc.value();
      out.terms_used = k + 1;
      double trunc = 0.0;
      if (last_mag > 0.0) {
        double r = 0.0;
        const std::size_t n = ratios.size();
        for (std::size_t i = n >= 3 ? n - 3 : 0; i < n; ++i) {
          r = std::max(r, ratios[i]);
        }
        trunc = r < 0.9 ? last_mag * r / (1.0 - r) : 10.0 * last_mag;
      }
      out.tail_estimate = trunc + rounding + 2.0 * detail::kEps * abs_total;
      return out;
    }
  }
  throw Error(ErrorKind::NonConvergence,
              "series: stopping rule not met within " +
                  std::to_string(opts.max_terms) + " terms");
}

// Levin u-transform (beta = 1) of the partial sums, used where the plain
// partial sums do not converge but the series is Abel/Levin summable.
template <class V, class TermFn>
SeriesResult<V> sum_series_levin(TermFn&& term_at, const SeriesOptions& opts,
                                 std::size_t max_order = 40) {
  SeriesResult<V> out;
  out.boundary_summation = true;
  std::vector<V> terms;
  std::vector<V> partial;
  double rounding = 0.0;
  V running{};
  for (std::size_t k = 0; k < max_order + 2; ++k) {
    const SeriesTerm<V> t = term_at(k);
    if (t.value == V{} || !std::isfinite(std::abs(t.value))) {
      throw Error(ErrorKind::NonConvergence,
                  "boundary summation needs finite nonzero terms");
    }
    terms.push_back(t.value);
    running += t.value;
    partial.push_back(running);
    rounding = std::max(rounding, std::abs(t.value) * t.rel_error);
    if (opts.record_terms) out.term_magnitudes.push_back(std::abs(t.value));
  }

  auto levin = [&](std::size_t order) {
    V num{};
    V den{};
    const double beta = 1.0;
    double binom = 1.0;
    for (std::size_t j = 0; j <= order; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      const double ratio =
          std::pow((beta + double(j)) / (beta + double(order)),
                   double(order) - 1.0);
      const V omega = (beta + double(j)) * terms[j];
      const V w = sign * binom * ratio / omega;
      num += w * partial[j];
      den += w;
      binom = binom * double(order - j) / double(j + 1);
    }
    return num / den;
  };

  V prev = levin(1);
  double best_diff = std::numeric_limits<double>::infinity();
  V best = prev;
  std::size_t best_order = 1;
  int settled = 0;
  for (std::size_t order = 2; order <= max_order; ++order) {
    const V cur = levin(order);
    const double diff = std::abs(cur - prev);
    if (diff < best_diff) {
      best_diff = diff;
      best = cur;
      best_order = order;
    }
    if (order >= 4 && diff <= opts.tol * std::abs(cur)) {
      if (++settled >= 2) break;
    } else {
      settled = 0;
    }
    prev = cur;
  }
  if (!(best_diff <= 1e-6 * std::abs(best))) {
    throw Error(ErrorKind::NonConvergence,
                "boundary summation did not settle (best step " +
                    std::to_string(best_diff) + ")");
  }
  out.value = best;
  out.terms_used = best_order + 1;
  out.tail_estimate = best_diff + rounding;
  return out;
}

}  // namespace gtsf
