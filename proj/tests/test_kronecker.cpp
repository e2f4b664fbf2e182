#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "thetaval/kronecker.hpp"

using namespace thetaval;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<BinaryQuadraticForm> kForms = {{1, 0, 1}, {2, -2, 1}, {1, 0, 2}, {1, 1, 1}};

}  // namespace

TEST(Kronecker, BothSidesAgreeForFourForms) {
    for (const auto& q : kForms) {
        const ApproxValue lhs = kronecker_lhs(q);
        const ApproxValue rhs = kronecker_rhs(q);
        EXPECT_LE(std::abs(lhs.value - rhs.value), 1e-6) << q.to_string();
        EXPECT_LE(std::abs(lhs.value - rhs.value), lhs.error_bound + rhs.error_bound + 1e-12) << q.to_string();
    }
}

TEST(Kronecker, RightSideAtIFromGamma) {
    // |eta(i)| = Gamma(1/4) / (2 pi^(3/4)) with the library Gamma as oracle
    const double eta_i = std::tgamma(0.25) / (2 * std::pow(kPi, 0.75));
    const double expected = 0.5 * std::log(1.0 / 4) - 2 * std::log(eta_i);
    const ApproxValue rhs = kronecker_rhs({1, 0, 1});
    EXPECT_LE(std::abs(rhs.value - expected), rhs.error_bound);
    EXPECT_NEAR(kronecker_rhs({1, 0, 1}, 1e-15).value, expected, 1e-14);
    // (2,-2,1) has z_Q = (1 + i)/2 and |eta((1+i)/2)|^2 = sqrt(2) |eta(i)|^2
    EXPECT_NEAR(kronecker_rhs({2, -2, 1}, 1e-15).value, 0.5 * std::log(2.0 / 4) - std::log(std::sqrt(2.0) * eta_i * eta_i), 1e-14);
}

TEST(Kronecker, LeftSideStableUnderNodeChange) {
    for (const auto& q : {kForms[0], kForms[3]}) {
        const ExtrapolationTable base = kronecker_lhs_table(q);
        ExtrapolationSettings halved;
        halved.eps0 = 0.05;
        const ExtrapolationTable other = kronecker_lhs_table(q, halved);
        EXPECT_LT(std::abs(other.extrapolated - base.extrapolated), base.error_bound) << q.to_string();
        EXPECT_EQ(base.abscissae.size(), 8u);
        EXPECT_DOUBLE_EQ(base.abscissae.front(), 0.1);
    }
}

TEST(Kronecker, UnreachableToleranceThrows) {
    try {
        (void)kronecker_lhs({1, 0, 1}, 1e-20);
        FAIL() << "expected NonConvergence";
    } catch (const NonConvergence& e) {
        EXPECT_NEAR(e.best_value, kronecker_rhs({1, 0, 1}).value, 1e-9);
    }
    EXPECT_THROW(kronecker_lhs({1, 0, 1}, 0.0), std::invalid_argument);
}

TEST(L1Series, EqualsMinusLogEtaSquared) {
    for (const auto& q : kForms) {
        const double eta_abs = eta_uhp(q.z_q()).abs();
        const ApproxValue l1 = l1_series(q);
        EXPECT_NEAR(l1.value, -2 * std::log(eta_abs), 1e-10) << q.to_string();
        EXPECT_LE(l1.error_bound, 1e-12);
    }
}

TEST(DerivativeIdentity, ThreeRoutesAgree) {
    const DerivativeRoutes d = derivative_routes();
    EXPECT_NEAR(d.from_series.value, d.from_difference.value, 1e-6);
    EXPECT_NEAR(d.from_series.value, d.from_integral.value, 1e-6);
    EXPECT_NEAR(d.from_difference.value, d.from_integral.value, 1e-6);
    EXPECT_LE(std::abs(d.from_series.value - d.from_difference.value), d.from_series.error_bound + d.from_difference.error_bound);
    // the series route and the integral route share nothing and agree far tighter
    EXPECT_NEAR(d.from_series.value, d.from_integral.value, 1e-13);
}

TEST(TargetLimit, MatchesI) {
    const VerificationRecord r = target_limit_check();
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.abs_error, 1e-8);
    EXPECT_NEAR(r.rhs, integral_I().value, 0.0);
}

TEST(ThetaAtI, FourRoutesAgree) {
    const ThetaAssembly t = theta_at_i_assembly();
    ASSERT_EQ(t.pairs.size(), 6u);
    EXPECT_TRUE(t.all_pass());
    for (const auto& p : t.pairs) EXPECT_LE(p.abs_error, 1e-10) << p.name;
    EXPECT_LE(std::abs(t.series.value - t.eta.value), 1e-12);
    EXPECT_EQ(t.pairs.front().name, "theta(i) A vs B");
    EXPECT_LE(t.worst().abs_error, 1e-10);
    // pi^(1/4) / Gamma(3/4), with the library Gamma
    EXPECT_NEAR(t.gamma_reflected.value, std::pow(kPi, 0.25) / std::tgamma(0.75), 1e-14);
}
