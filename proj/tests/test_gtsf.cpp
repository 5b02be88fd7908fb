#include <cmath>
#include <cstring>

#include <gtest/gtest.h>

#include "gtsf/errors.hpp"
#include "gtsf/gtsf.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gtsf;
using gtsf_test::Gen;
using gtsf_test::rel_err;

namespace {

// H_0(1) from standard Struve tables.
constexpr double kStruveH0At1 = 0.5686566;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no gtsf::Error thrown";
  return ErrorKind::InvalidCase;
}

double direct(const GtsfParams& g, double z) {
  return oracle::gtsf_direct(g.a, g.p, g.b, g.c, g.lambda, g.mu, g.xi, z);
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST(EvalGtsf, ClassicalStruveH0) {
  const GtsfParams g{1, 0.0, 1.0, 1.0, 1.0, 1.5, 1.0};
  const double v = eval_gtsf(g, 1.0).value;
  EXPECT_LE(rel_err(v, direct(g, 1.0)), 1e-12);
  EXPECT_LE(std::abs(v - kStruveH0At1), 1e-6);
}

TEST(EvalGtsf, ModifiedStruveL0) {
  const GtsfParams h{1, 0.0, 1.0, 1.0, 1.0, 1.5, 1.0};
  const GtsfParams l{1, 0.0, 1.0, -1.0, 1.0, 1.5, 1.0};
  const double lv = eval_gtsf(l, 1.0).value;
  EXPECT_LE(rel_err(lv, direct(l, 1.0)), 1e-12);
  EXPECT_GT(lv, eval_gtsf(h, 1.0).value);
  EXPECT_GT(eval_gtsf(h, 1.0).value, 0.0);
}

TEST(EvalGtsf, ZeroArgument) {
  for (double p : {-0.5, 0.0, 2.0}) {
    EXPECT_EQ(eval_gtsf(reduced_params(p, 1.0, 1.0), 0.0).value, 0.0);
    EXPECT_EQ(eval_h_pbc(p, 0.3, -1.0, 0.0).value, 0.0);
  }
  EXPECT_EQ(kind_of([] { eval_gtsf(reduced_params(-1.5, 1.0, 1.0), 0.0); }), ErrorKind::Domain);
}

TEST(EvalGtsf, DomainErrors) {
  EXPECT_EQ(kind_of([] { eval_gtsf(GtsfParams{}, -0.1); }), ErrorKind::Domain);
  GtsfParams bad_a;
  bad_a.a = 0;
  EXPECT_EQ(kind_of([&] { eval_gtsf(bad_a, 1.0); }), ErrorKind::Domain);
  GtsfParams bad_lambda;
  bad_lambda.lambda = 0.0;
  EXPECT_EQ(kind_of([&] { eval_gtsf(bad_lambda, 1.0); }), ErrorKind::Domain);
  GtsfParams bad_xi;
  bad_xi.xi = -1.0;
  EXPECT_EQ(kind_of([&] { eval_gtsf(bad_xi, 1.0); }), ErrorKind::Domain);
}

TEST(EvalGtsf, NonReducedParameters) {
  Gen gen(31);
  for (int i = 0; i < 30; ++i) {
    const GtsfParams g{gen.integer(1, 3),        gen.uniform(-0.5, 2.0), gen.uniform(-1.0, 2.0),
                       gen.uniform(-2.0, 2.0),   gen.uniform(0.5, 2.5),  gen.uniform(0.3, 2.0),
                       gen.uniform(0.5, 2.0)};
    const double z = gen.uniform(0.1, 4.0);
    EXPECT_LE(rel_err(eval_gtsf(g, z).value, direct(g, z)), 1e-12)
        << "a=" << g.a << " p=" << g.p << " b=" << g.b << " c=" << g.c << " z=" << z;
  }
}

TEST(EvalHpbc, SameCodePathAsGtsf) {
  const double v = eval_h_pbc(0.0, 1.0, 1.0, 1.0).value;
  EXPECT_LE(std::abs(v - kStruveH0At1), 1e-6);
  EXPECT_TRUE(same_bits(v, eval_gtsf(GtsfParams{1, 0.0, 1.0, 1.0, 1.0, 1.5, 1.0}, 1.0).value));
}

TEST(GtsfProperties, ReductionIdentity) {
  Gen gen(32);
  for (int i = 0; i < 50; ++i) {
    const double p = gen.uniform(-0.9, 3.0);
    const double b = gen.uniform(-2.0, 2.0);
    const double c = gen.uniform(-2.0, 2.0);
    const double z = gen.uniform(0.0, 5.0);
    const double h = eval_h_pbc(p, b, c, z).value;
    const double w = eval_gtsf(GtsfParams{1, p, b, c, 1.0, 1.5, 1.0}, z).value;
    EXPECT_TRUE(same_bits(h, w));
    const double want = oracle::gtsf_direct(1, p, b, c, 1.0, 1.5, 1.0, z);
    EXPECT_LE(rel_err(h, want), 1e-12) << "p=" << p << " b=" << b << " c=" << c << " z=" << z;
  }
}

TEST(GtsfProperties, ScalingStructure) {
  Gen gen(33);
  for (int i = 0; i < 30; ++i) {
    const GtsfParams g = reduced_params(gen.uniform(-0.5, 2.0), gen.uniform(0.0, 2.0),
                                        gen.uniform(-2.0, 2.0));
    const double z = gen.uniform(0.1, 4.0);
    const double scaled = eval_gtsf(g, z).value / std::pow(0.5 * z, g.p + 1.0);
    const double inner = eval_wright(inner_wright_params(g), -g.c * z * z / 4.0).value.real();
    EXPECT_LE(rel_err(scaled, inner), 1e-14);
    EXPECT_EQ(eval_gtsf_inner(g, z).value, inner);
  }
}

TEST(GtsfProperties, SignFlip) {
  Gen gen(34);
  for (int i = 0; i < 30; ++i) {
    GtsfParams g = reduced_params(gen.uniform(-0.5, 2.0), gen.uniform(0.0, 2.0),
                                  gen.uniform(0.1, 2.0));
    const double z = gen.uniform(0.1, 4.0);
    GtsfParams flipped = g;
    flipped.c = -g.c;
    const double negated = eval_wright(inner_wright_params(g), g.c * z * z / 4.0).value.real();
    EXPECT_LE(rel_err(eval_gtsf_inner(flipped, z).value, negated), 1e-13);
  }
}

TEST(GtsfWide, AgreesWithSeriesAtModerateArgument) {
  for (double b : {0.5, 1.0, 3.0}) {
    const GtsfParams g = reduced_params(0.5, b, 1.0);
    for (double z : {0.5, 2.0, 3.9, 4.1, 6.0}) {
      EXPECT_LE(std::abs(eval_gtsf_wide(g, z) - eval_gtsf(g, z).value), 1e-13) << b << " " << z;
    }
  }
  const GtsfParams general{2, 0.5, 1.0, 1.0, 2.0, 1.2, 1.5};
  EXPECT_EQ(eval_gtsf_wide(general, 3.0), eval_gtsf(general, 3.0).value);
}

TEST(GtsfWide, StruveH0AcrossRanges) {
  const GtsfParams g = reduced_params(0.0, 1.0, 1.0);
  for (double z : {1.0, 5.0, 10.0, 19.5, 25.0, 29.9, 30.0, 45.0, 80.0, 200.0}) {
    EXPECT_LE(std::abs(eval_gtsf_wide(g, z) - oracle::struve_h0(z)), 2e-14) << z;
  }
}

TEST(GtsfWide, StruveHalfClosedForm) {
  // p = 1/2, b = 1 gives nu = 1/2 and W(z) = H_{1/2}(z)
  const GtsfParams g = reduced_params(0.5, 1.0, 1.0);
  for (double z : {1.0, 5.0, 12.0, 25.0, 31.0, 60.0, 150.0}) {
    EXPECT_LE(std::abs(eval_gtsf_wide(g, z) - oracle::struve_h_half(z)), 2e-14) << z;
  }
}

TEST(GtsfWide, ScaledArgument) {
  // c = 4 doubles the Struve argument: W(z) = (z/2)^(p+1) (y/2)^(-nu-1) H_nu(y), y = 2z
  const GtsfParams g = reduced_params(0.0, 1.0, 4.0);
  for (double z : {3.0, 8.0, 20.0}) {
    EXPECT_LE(std::abs(eval_gtsf_wide(g, z) - 0.5 * oracle::struve_h0(2.0 * z)), 2e-14) << z;
  }
}
