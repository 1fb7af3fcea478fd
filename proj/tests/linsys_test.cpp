#include <gtest/gtest.h>

#include <random>

#include "ilsolve/bench/generator.hpp"
#include "ilsolve/bench/suite.hpp"
#include "ilsolve/linsys.hpp"
#include "support/rational_oracle.hpp"
#include "support/worked_examples.hpp"

namespace {

using namespace ilsolve;

TEST(LinearSystem, ShapeChecks) {
  EXPECT_THROW(IntervalLinearSystem(IntervalMatrix(2, 3), IntervalVector(2)), NonSquareError);
  EXPECT_THROW(IntervalLinearSystem(IntervalMatrix(2, 2), IntervalVector(3)), DimensionError);
}

TEST(LinearSystem, MidpointIdentityBuilder) {
  const RealMatrix r{{0.1, 0.2}, {0.3, 0.05}};
  const auto sys = IntervalLinearSystem::midpoint_identity(r, IntervalVector{Interval(1.0), Interval(2.0)});
  EXPECT_EQ(sys.form(), SystemForm::MidpointIdentity);
  EXPECT_EQ(sys.A()(0, 1), Interval(-0.2, 0.2));
  EXPECT_EQ(sys.A()(0, 0).mid(), 1.0);
  EXPECT_GE(sys.radius(0, 0), 0.1);
  EXPECT_LE(sys.radius(0, 0), 0.1 + 0x1p-52);
  EXPECT_EQ(sys.A()(0, 0), Interval(1.0 - sys.radius(0, 0), 1.0 + sys.radius(0, 0)));
  EXPECT_THROW(IntervalLinearSystem::midpoint_identity(RealMatrix{{-0.1}}, IntervalVector{Interval(1.0)}),
               DomainError);
}

TEST(LinearSystem, MidpointIdentityFormIsValidated) {
  const IntervalMatrix off{{Interval(0.5, 1.5), Interval(-0.1, 0.2)}, {Interval(0.0), Interval(1.0)}};
  EXPECT_THROW(IntervalLinearSystem(off, IntervalVector(2), SystemForm::MidpointIdentity), DomainError);
  const IntervalMatrix ok{{Interval(0.5, 1.5), Interval(-0.25, 0.25)}, {Interval(0.0), Interval(1.0)}};
  EXPECT_NO_THROW(IntervalLinearSystem(ok, IntervalVector(2), SystemForm::MidpointIdentity));
}

TEST(Precondition, SingularMidpointThrows) {
  const IntervalMatrix a{{Interval(1.0), Interval(2.0)}, {Interval(2.0), Interval(4.0)}};
  EXPECT_THROW(precondition_relax(IntervalLinearSystem(a, IntervalVector(2))), SingularMidpointError);
}

TEST(Precondition, RelaxedSystemIsMidpointIdentity) {
  const auto pre = precondition_relax(fixtures::two_by_two_system());
  EXPECT_EQ(pre.form(), SystemForm::MidpointIdentity);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(pre.A()(i, i).mid(), 1.0);
}

// Exact solutions of sampled raw point systems satisfy the Oettli-Prager
// inequality of the relaxed system, i.e. lie in its solution set.
TEST(Precondition, RawSolutionsSatisfyTheRelaxedSystem) {
  const auto raw = fixtures::three_by_three_system();
  const auto pre = precondition_relax(raw);
  const std::size_t n = raw.size();
  std::mt19937_64 rng(17);
  for (int s = 0; s < 50; ++s) {
    auto [a, b] = bench::sample_point_system(raw, rng);
    const auto x = fixtures::solve_exact(a, b);
    ASSERT_TRUE(x.has_value());
    // |mid(A') x - mid(b')| <= rad(A') |x| + rad(b')
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class lhs = -mpq_class(pre.b()[i].lo()) / 2 - mpq_class(pre.b()[i].hi()) / 2;
      mpq_class rhs = (mpq_class(pre.b()[i].hi()) - mpq_class(pre.b()[i].lo())) / 2;
      for (std::size_t j = 0; j < n; ++j) {
        const Interval& e = pre.A()(i, j);
        const mpq_class mid = (mpq_class(e.lo()) + mpq_class(e.hi())) / 2;
        const mpq_class rad = (mpq_class(e.hi()) - mpq_class(e.lo())) / 2;
        lhs += mid * (*x)[j];
        rhs += rad * abs((*x)[j]);
      }
      EXPECT_LE(abs(lhs), rhs);
    }
  }
}

TEST(Certify, AcceptsContractiveAndRejectsExpansiveRadius) {
  const auto good = IntervalLinearSystem::midpoint_identity(RealMatrix{{0.1, 0.3}, {0.3, 0.1}},
                                                            IntervalVector{Interval(1.0), Interval(1.0)});
  const RegularityCertificate cert = certify_regular(good);
  EXPECT_TRUE(cert.verified);
  for (double v : cert.witness) EXPECT_GT(v, 0.0);
  EXPECT_NO_THROW(CertifiedSystem::certify(good));

  // rho(rad A) = 1.2.
  const auto bad = IntervalLinearSystem::midpoint_identity(RealMatrix{{0.6, 0.6}, {0.6, 0.6}},
                                                           IntervalVector{Interval(1.0), Interval(1.0)});
  EXPECT_FALSE(certify_regular(bad).verified);
  EXPECT_THROW(CertifiedSystem::certify(bad), NotCertifiedError);
}

TEST(Certify, RawFormIsRejected) {
  EXPECT_THROW(certify_regular(fixtures::two_by_two_system()), DomainError);
}

TEST(Certify, ComparisonAndRadiusAreCached) {
  const auto sys = prepare(fixtures::two_by_two_system());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(sys.radius()(i, j), sys.system().radius(i, j));
      EXPECT_EQ(sys.comparison()(i, j), (i == j ? 1.0 : 0.0) - sys.radius()(i, j));
    }
}

TEST(Certify, RandomTenByTenWithSmallRadiusCertifies) {
  std::size_t certified = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto rng = bench::instance_stream(seed, 0);
    try {
      prepare(bench::draw_raw_system(10, 0.01, rng));
      ++certified;
    } catch (const Error&) {
    }
  }
  EXPECT_GE(certified, 99u);
}

}  // namespace
