#include <gtest/gtest.h>

#include <random>

#include "ilsolve/bench/suite.hpp"
#include "ilsolve/cheap_bounds.hpp"
#include "ilsolve/magnitude.hpp"
#include "support/rational_oracle.hpp"
#include "support/worked_examples.hpp"

namespace {

using namespace ilsolve;

void expect_box(const IntervalVector& x, std::initializer_list<std::pair<double, double>> want, double tol) {
  ASSERT_EQ(x.size(), want.size());
  std::size_t i = 0;
  for (const auto& [lo, hi] : want) {
    EXPECT_NEAR(x[i].lo(), lo, tol) << "component " << i;
    EXPECT_NEAR(x[i].hi(), hi, tol) << "component " << i;
    ++i;
  }
}

void expect_values(const RealVector& v, std::initializer_list<double> want, double tol) {
  ASSERT_EQ(v.size(), want.size());
  std::size_t i = 0;
  for (double w : want) EXPECT_NEAR(v[i++], w, tol) << "component " << i - 1;
}

TEST(TwoByTwo, MagnitudeMatchesPublishedValues) {
  const auto sys = prepare(fixtures::two_by_two_system());
  expect_box(magnitude_enclosure(sys), {{-3.4546, -0.3557}, {-1.9091, -0.3741}}, 5e-4);
}

TEST(TwoByTwo, ExactModeGivesTheHull) {
  const auto sys = prepare(fixtures::two_by_two_system());
  const auto exact = magnitude_enclosure(sys, BoundMode::Exact);
  const auto hull = ning_kearfott_hull(sys, assemble_ud(sys, BoundMode::Exact));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(exact[i].lo(), hull[i].lo(), 1e-9);
    EXPECT_NEAR(exact[i].hi(), hull[i].hi(), 1e-9);
  }
}

TEST(TwoByTwo, GammaZeroIsTheGaussSeidelLimit) {
  const auto sys = prepare(fixtures::two_by_two_system());
  const auto g0 = magnitude_enclosure_gamma0(sys);
  const auto lim = gs_limit(sys, enclose_u(sys));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(g0[i].lo(), lim[i].lo(), 1e-12);
    EXPECT_NEAR(g0[i].hi(), lim[i].hi(), 1e-12);
  }
}

TEST(ThreeByThree, CheapBoundsMatchPublishedValues) {
  const auto sys = prepare(fixtures::three_by_three_system());
  expect_values(cheap_lower_bound_u(sys.system()), {1.1633, 1.4367, 0.9788}, 5e-4);
  expect_values(cheap_lower_bound_d(sys.system()), {1.2343, 1.2536, 1.2030}, 5e-4);
}

TEST(ThreeByThree, GammaAndAlphaMatchPublishedValues) {
  const auto sys = prepare(fixtures::three_by_three_system());
  expect_values(assemble_ud(sys, BoundMode::Cheap).gamma, {0.0387, 0.0396, 0.0366}, 5e-4);
  // alpha = <a_ii> - 1/d_i with the exact d; gamma from the verified d_lo.
  expect_values(assemble_ud(sys, BoundMode::Exact).gamma, {0.0632, 0.0643, 0.0604}, 5e-4);
}

TEST(ThreeByThree, OperatorAfterGaussSeidelMatchesPublishedValues) {
  const auto sys = prepare(fixtures::three_by_three_system());
  HybridOptions opts;
  opts.gauss_seidel.sweep = Sweep::Sequential;
  opts.gauss_seidel.init = InitialBox::NormBound;
  opts.shrink = ShrinkBound::Cheap;
  const HybridResult r = gs_then_operator(sys, 4, opts);
  expect_box(r.refined, {{-1.2820, -0.0258}, {0.2261, 1.5641}, {-1.0822, 0.0497}}, 2e-3);
  EXPECT_TRUE(subset(r.refined, r.gauss_seidel.enclosure));
}

TEST(Operator, GammaZeroReducesToGaussSeidelStep) {
  const auto sys = prepare(fixtures::three_by_three_system());
  const IntervalVector x = magnitude_box(enclose_u(sys));
  const RealVector zero(3, 0.0);
  const IntervalVector op = apply_new_operator(sys, x, zero, zero);
  const IntervalVector gs = gauss_seidel_step(sys.system(), x);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(op[i].lo(), gs[i].lo(), 1e-12);
    EXPECT_NEAR(op[i].hi(), gs[i].hi(), 1e-12);
  }
}

TEST(Operator, LargerGammaGivesTighterResult) {
  const auto sys = prepare(fixtures::three_by_three_system());
  const UDBounds exact = assemble_ud(sys, BoundMode::Exact);
  const IntervalVector x = magnitude_box(exact.u_enc);
  const RealVector ul = lower(exact.u_enc);
  IntervalVector prev = apply_new_operator(sys, x, RealVector(3, 0.0), ul);
  for (double f : {0.25, 0.5, 0.75, 1.0}) {
    RealVector g(3);
    for (std::size_t i = 0; i < 3; ++i) g[i] = f * exact.gamma[i];
    const IntervalVector cur = apply_new_operator(sys, x, g, ul);
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_TRUE(subset(cur[i], Interval(prev[i].lo() - 1e-12, prev[i].hi() + 1e-12)));
    prev = cur;
  }
}

TEST(Operator, RejectsBadArguments) {
  const auto sys = prepare(fixtures::two_by_two_system());
  const IntervalVector x = magnitude_box(enclose_u(sys));
  EXPECT_THROW(new_operator_row(sys, x, 0, -0.1, 1.0), DomainError);
  EXPECT_THROW(new_operator_row(sys, x, 0, 2.0, 0.0), DomainError);
  EXPECT_THROW(apply_new_operator(sys, x, RealVector(3, 0.0), RealVector(2, 0.0)), DimensionError);
  EXPECT_THROW(new_operator_row(sys, IntervalVector(3), 0, 0.0, 0.0), DimensionError);
}

// Soundness of one pass on the 3x3 example against sampled exact solutions of
// the preconditioned system.
TEST(Operator, EnclosesSampledSolutions) {
  const auto sys = prepare(fixtures::three_by_three_system());
  const IntervalVector x = magnitude_enclosure(sys);
  std::mt19937_64 rng(53);
  for (int s = 0; s < 200; ++s) {
    auto [a, b] = bench::sample_point_system(sys.system(), rng);
    const auto sol = fixtures::solve_exact(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_TRUE(fixtures::contains_exact(x, *sol));
  }
}

}  // namespace
