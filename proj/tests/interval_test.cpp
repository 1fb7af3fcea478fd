#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "ilsolve/interval.hpp"
#include "ilsolve/rounding.hpp"
#include "support/rational_oracle.hpp"

namespace {

using namespace ilsolve;
namespace rd = ilsolve::rounding;

double random_double(std::mt19937_64& rng) {
  // Mixed magnitudes; products reach below the residual floor, quotients stay finite.
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-500, 60);
  return std::ldexp(mant(rng), expo(rng));
}

TEST(Rounding, ExactResultsAreUnchanged) {
  EXPECT_EQ(rd::add_down(1.0, 2.0), 3.0);
  EXPECT_EQ(rd::add_up(1.0, 2.0), 3.0);
  EXPECT_EQ(rd::mul_down(3.0, 0.5), 1.5);
  EXPECT_EQ(rd::mul_up(3.0, 0.5), 1.5);
  EXPECT_EQ(rd::div_down(1.0, 4.0), 0.25);
  EXPECT_EQ(rd::div_up(1.0, 4.0), 0.25);
  EXPECT_EQ(rd::sub_down(1.0, 1.0), 0.0);
}

TEST(Rounding, InexactResultsStraddleTheExactValue) {
  EXPECT_LT(rd::div_down(1.0, 3.0), rd::div_up(1.0, 3.0));
  EXPECT_EQ(rd::next_up(rd::div_down(1.0, 3.0)), rd::div_up(1.0, 3.0));
  EXPECT_LT(rd::add_down(1.0, 0x1p-60), rd::add_up(1.0, 0x1p-60));
}

TEST(Rounding, MatchesRationalOracleOnRandomOperands) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20000; ++k) {
    const double a = random_double(rng), b = random_double(rng);
    const mpq_class qa(a), qb(b);
    auto check = [](double lo, double hi, const mpq_class& exact) {
      ASSERT_LE(mpq_class(lo), exact);
      ASSERT_GE(mpq_class(hi), exact);
      ASSERT_LE(hi, rd::next_up(rd::next_up(lo)));
    };
    check(rd::add_down(a, b), rd::add_up(a, b), qa + qb);
    check(rd::sub_down(a, b), rd::sub_up(a, b), qa - qb);
    check(rd::mul_down(a, b), rd::mul_up(a, b), qa * qb);
    if (b != 0.0) check(rd::div_down(a, b), rd::div_up(a, b), qa / qb);
  }
}

TEST(Rounding, OverflowThrows) {
  const double big = std::numeric_limits<double>::max();
  EXPECT_THROW(rd::add_up(big, big), OverflowError);
  EXPECT_THROW(rd::mul_down(big, 2.0), OverflowError);
}

TEST(Interval, ConstructionRejectsBadEndpoints) {
  EXPECT_THROW(Interval(2.0, 1.0), DomainError);
  EXPECT_THROW(Interval(0.0, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(Interval(std::nan(""), 1.0), DomainError);
  EXPECT_NO_THROW(Interval(1.0, 1.0));
}

TEST(Interval, DerivedQuantities) {
  const Interval x(-3.0, 1.0);
  EXPECT_EQ(x.mid(), -1.0);
  EXPECT_EQ(x.rad(), 2.0);
  EXPECT_EQ(x.mag(), 3.0);
  EXPECT_EQ(x.mig(), 0.0);
  EXPECT_EQ(Interval(2.0, 5.0).mig(), 2.0);
  EXPECT_EQ(Interval(-5.0, -2.0).mig(), 2.0);
  EXPECT_TRUE(x.contains_zero());
  EXPECT_TRUE(Interval(4.0).is_point());
}

TEST(Interval, RadiusIsRoundedUp) {
  const Interval x(0.1, 0.7);
  EXPECT_GE(mpq_class(x.rad()), (mpq_class(0.7) - mpq_class(0.1)) / 2);
}

TEST(Interval, SetOperations) {
  const Interval a(0.0, 2.0), b(1.0, 3.0), c(5.0, 6.0);
  EXPECT_EQ(*intersect(a, b), Interval(1.0, 2.0));
  EXPECT_FALSE(intersect(a, c).has_value());
  EXPECT_EQ(hull(a, c), Interval(0.0, 6.0));
  EXPECT_TRUE(subset(Interval(1.0, 2.0), a));
  EXPECT_FALSE(subset(b, a));
}

TEST(Interval, ArithmeticByHand) {
  const Interval a(1.0, 2.0), b(-3.0, 4.0);
  EXPECT_EQ(a + b, Interval(-2.0, 6.0));
  EXPECT_EQ(a - b, Interval(-3.0, 5.0));
  EXPECT_EQ(a * b, Interval(-6.0, 8.0));
  EXPECT_EQ(-a, Interval(-2.0, -1.0));
  EXPECT_EQ(Interval(1.0, 2.0) / Interval(2.0, 4.0), Interval(0.25, 1.0));
  EXPECT_EQ(2.0 * b, Interval(-6.0, 8.0));
  EXPECT_EQ(b * -1.0, Interval(-4.0, 3.0));
}

TEST(Interval, DivisionByIntervalContainingZeroThrows) {
  EXPECT_THROW(Interval(1.0) / Interval(-1.0, 1.0), DomainError);
  EXPECT_THROW(Interval(1.0) / Interval(0.0, 1.0), DomainError);
}

// Every pointwise result of sampled operands lies in the interval result.
TEST(Interval, InclusionPropertyAgainstRationalOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0), t(0.0, 1.0);
  for (int k = 0; k < 3000; ++k) {
    double a0 = u(rng), a1 = u(rng), b0 = u(rng), b1 = u(rng);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const Interval a(a0, a1), b(b0, b1);
    const double x = a0 + (a1 - a0) * t(rng), y = b0 + (b1 - b0) * t(rng);
    if (!a.contains(x) || !b.contains(y)) continue;
    const mpq_class qx(x), qy(y);
    EXPECT_TRUE(fixtures::contains_exact(a + b, qx + qy));
    EXPECT_TRUE(fixtures::contains_exact(a - b, qx - qy));
    EXPECT_TRUE(fixtures::contains_exact(a * b, qx * qy));
    if (!b.contains_zero()) EXPECT_TRUE(fixtures::contains_exact(a / b, qx / qy));
  }
}

TEST(Interval, StreamsAsBracketPair) {
  std::ostringstream s;
  s << Interval(1.0, 2.0);
  EXPECT_EQ(s.str().front(), '[');
  EXPECT_EQ(s.str().back(), ']');
}

}  // namespace
