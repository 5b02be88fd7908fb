#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "gtsf/errors.hpp"
#include "gtsf/wright.hpp"
#include "support.hpp"

using namespace gtsf;
using gtsf_test::Gen;
using gtsf_test::rel_err;
using C = std::complex<double>;

namespace {

const WrightParams kExp{{{1.0, 1.0}}, {{1.0, 1.0}}};

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no gtsf::Error thrown";
  return ErrorKind::InvalidCase;
}

}  // namespace

TEST(Kappa, Examples) {
  // Euler-transform pairs with lambda = a = 1:
  // upper {(p+r+1, 2), (1, 1)}, lower {(mu, 1), (q, 1), (p+r+s+1, 2)}
  const WrightParams euler{{{2.5, 2.0}, {1.0, 1.0}}, {{1.5, 1.0}, {2.0, 1.0}, {5.5, 2.0}}};
  EXPECT_DOUBLE_EQ(kappa(euler), 1.0);
  EXPECT_DOUBLE_EQ(kappa(kExp), 0.0);
  EXPECT_DOUBLE_EQ(kappa(WrightParams{{{1.0, 3.0}}, {{1.0, 1.0}}}), -2.0);
}

TEST(EvalWright, ExponentialReduction) {
  for (double z : {-2.0, 0.5, 1.0, 3.0}) {
    const auto r = eval_wright(kExp, z);
    EXPECT_LE(rel_err(r.value.real(), std::exp(z)), 1e-10) << z;
    EXPECT_EQ(r.value.imag(), 0.0);
    EXPECT_GE(r.terms_used, 1u);
    EXPECT_GE(r.tail_estimate, 0.0);
  }
  const C z(1.0, 2.0);
  EXPECT_LE(rel_err(eval_wright(kExp, z).value, std::exp(z)), 1e-12);
}

TEST(EvalWright, ComplexUpperParameters) {
  const C a(0.5, 0.3);
  const WrightParams w{{{a, 1.0}}, {{a, 1.0}}};
  EXPECT_LE(rel_err(eval_wright(w, 1.7).value, C(std::exp(1.7))), 1e-12);
}

TEST(EvalWright, ZeroArgumentGivesGammaProduct) {
  const WrightParams w{{{2.5, 2.0}, {0.7, 1.0}}, {{1.5, 1.0}, {3.25, 0.5}}};
  const double want = std::tgamma(2.5) * std::tgamma(0.7) / (std::tgamma(1.5) * std::tgamma(3.25));
  const auto r = eval_wright(w, 0.0);
  EXPECT_LE(rel_err(r.value.real(), want), 1e-13);
}

TEST(EvalWright, MittagLefflerCosine) {
  // sum_k z^k / (2k)! = cosh(sqrt z); at z = -y^2 this is cos y
  const WrightParams w{{{1.0, 1.0}}, {{1.0, 2.0}}};
  for (double y : {0.3, 1.0, 2.5, 4.0}) {
    EXPECT_LE(std::abs(eval_wright(w, -y * y).value.real() - std::cos(y)), 1e-13) << y;
  }
}

TEST(EvalWright, GaussHypergeometricReduction) {
  // 2Psi1[(a,1),(b,1);(c,1)|z] = Gamma(a)Gamma(b)/Gamma(c) 2F1(a,b;c;z)
  Gen g(21);
  for (int i = 0; i < 20; ++i) {
    const double a = g.uniform(0.2, 3.0);
    const double b = g.uniform(0.2, 3.0);
    const double c = g.uniform(0.5, 4.0);
    const double z = g.uniform(-0.6, 0.6);
    long double f = 1, term = 1;
    for (int k = 0; k < 400; ++k) {
      term *= (a + k) * (b + k) / ((c + k) * (k + 1.0L)) * z;
      f += term;
    }
    const double want = double(std::tgamma(a) * std::tgamma(b) / std::tgamma(c) * f);
    const WrightParams w{{{a, 1.0}, {b, 1.0}}, {{c, 1.0}}};
    EXPECT_LE(rel_err(eval_wright(w, z).value.real(), want), 1e-12);
  }
}

TEST(EvalWright, DenominatorPolesGiveZeroTerms) {
  // 1/Gamma(k - 1) kills k = 0, 1: sum_{k>=2} z^k / (k-2)! = z^2 e^z
  const WrightParams w{{{1.0, 1.0}}, {{-1.0, 1.0}}};
  for (double z : {-1.5, 0.5, 2.0}) {
    EXPECT_LE(rel_err(eval_wright(w, z).value.real(), z * z * std::exp(z)), 1e-12) << z;
  }
}

TEST(EvalWright, NumeratorPoleIsAnError) {
  const WrightParams w{{{-2.0, 1.0}}, {{1.0, 1.0}}};
  EXPECT_EQ(kind_of([&] { eval_wright(w, 0.5); }), ErrorKind::NumeratorPole);
  // -2.5 + 0.25 k reaches the pole -2 at k = 2
  const WrightParams late{{{-2.5, 0.25}}, {{1.0, 1.0}}};
  EXPECT_EQ(kind_of([&] { eval_wright(late, 0.5); }), ErrorKind::NumeratorPole);
}

TEST(EvalWright, ZeroCoefficientRejected) {
  EXPECT_EQ(kind_of([] { eval_wright(WrightParams{{{1.0, 0.0}}, {{1.0, 1.0}}}, 0.5); }),
            ErrorKind::Domain);
}

TEST(EvalWright, ConvergenceGate) {
  const WrightParams steep{{{1.0, 3.0}}, {{1.0, 1.0}}};
  for (double z : {1e-6, -0.5, 2.0}) {
    EXPECT_EQ(kind_of([&] { eval_wright(steep, z); }), ErrorKind::ConvergenceViolation) << z;
  }
  // kappa < -1 is fine at z = 0 (only the k = 0 term)
  EXPECT_NO_THROW(eval_wright(steep, 0.0));
}

TEST(EvalWright, KappaMinusOneDisc) {
  // 1Psi0[(1,1)|z] = sum z^k = 1/(1-z), radius 1
  const WrightParams geo{{{1.0, 1.0}}, {}};
  EXPECT_DOUBLE_EQ(kappa(geo), -1.0);
  EXPECT_DOUBLE_EQ(convergence_radius(geo), 1.0);
  EXPECT_LE(rel_err(eval_wright(geo, 0.5).value.real(), 2.0), 1e-12);
  EXPECT_LE(rel_err(eval_wright(geo, C(0.3, 0.4)).value, 1.0 / (1.0 - C(0.3, 0.4))), 1e-12);
  EXPECT_EQ(kind_of([&] { eval_wright(geo, 1.2); }), ErrorKind::ConvergenceViolation);
  EXPECT_EQ(kind_of([&] { eval_wright(geo, 1.0); }), ErrorKind::ConvergenceViolation);
  EXPECT_EQ(kind_of([&] { eval_wright(geo, C(0.0, 1.0)); }), ErrorKind::ConvergenceViolation);
}

TEST(EvalWright, KappaMinusOneBoundaryUsesLevin) {
  const WrightParams geo{{{1.0, 1.0}}, {}};
  const auto r = eval_wright(geo, -1.0);
  EXPECT_TRUE(r.boundary_summation);
  EXPECT_LE(rel_err(r.value.real(), 0.5), 1e-12);
  // sum (-1)^k / (k+1) = ln 2: 1Psi1[(1,1),(1,1);(2,1)|-1]
  const WrightParams log2{{{1.0, 1.0}, {1.0, 1.0}}, {{2.0, 1.0}}};
  const auto l = eval_wright(log2, -1.0);
  EXPECT_TRUE(l.boundary_summation);
  EXPECT_LE(rel_err(l.value.real(), std::numbers::ln2), 1e-10);
}

TEST(EvalWright, NonConvergenceWhenTermsRunOut) {
  SeriesOptions opts;
  opts.max_terms = 5;
  EXPECT_EQ(kind_of([&] { eval_wright(kExp, 10.0, opts); }), ErrorKind::NonConvergence);
}

TEST(EvalWright, InvalidToleranceRejected) {
  SeriesOptions opts;
  opts.tol = 0.0;
  EXPECT_EQ(kind_of([&] { eval_wright(kExp, 1.0, opts); }), ErrorKind::Domain);
}

TEST(WrightProperties, TailEstimateBoundsRemainder) {
  for (int i = 0; i <= 100; ++i) {
    const double z = -5.0 + 0.1 * i;
    const auto r = eval_wright(kExp, z);
    const double remainder = std::abs(std::exp(z) - r.value.real());
    EXPECT_LE(remainder, r.tail_estimate) << z;
  }
}

TEST(WrightProperties, TermsKeepDecreasing) {
  SeriesOptions opts;
  opts.record_terms = true;
  for (double z : {-5.0, -2.0, 0.5, 3.0, 5.0}) {
    const auto r = eval_wright(kExp, z, opts);
    const auto& m = r.term_magnitudes;
    ASSERT_EQ(m.size(), r.terms_used);
    std::size_t start = m.size();
    for (std::size_t k = 3; k < m.size(); ++k) {
      if (m[k] < m[k - 1] && m[k - 1] < m[k - 2] && m[k - 2] < m[k - 3]) {
        start = k;
        break;
      }
    }
    for (std::size_t k = start + 1; k < m.size(); ++k) EXPECT_LT(m[k], m[k - 1]) << z << " k=" << k;
  }
}

TEST(WrightProperties, FirstTermIsGammaProduct) {
  Gen g(22);
  for (int i = 0; i < 50; ++i) {
    const double a1 = g.uniform(0.1, 6.0), a2 = g.uniform(0.1, 6.0);
    const double b1 = g.uniform(0.1, 6.0), b2 = g.uniform(0.1, 6.0);
    const WrightParams w{{{a1, g.uniform(0.5, 2.0)}, {a2, 1.0}},
                         {{b1, g.uniform(0.5, 2.0)}, {b2, g.uniform(1.0, 3.0)}}};
    const double want = std::tgamma(a1) * std::tgamma(a2) / (std::tgamma(b1) * std::tgamma(b2));
    EXPECT_LE(rel_err(wright_term(w, 0.7, 0).value.real(), want), 1e-13);
  }
}
