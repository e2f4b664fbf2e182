#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "thetaval/modular.hpp"
#include "thetaval/number_theory.hpp"
#include "thetaval/qseries.hpp"

using namespace thetaval;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Plain sum of e^(pi i n^2 z) over |n| <= 60, no phase reduction.
cd theta_oracle(cd z) {
    cd s = 1.0;
    for (int n = 1; n <= 60; ++n) s += 2.0 * std::exp(cd(0, kPi) * double(n) * double(n) * z);
    return s;
}

cd eta_oracle(cd z) {
    cd p = std::exp(cd(0, kPi) * z / 12.0);
    for (int n = 1; n <= 4000; ++n) p *= 1.0 - std::exp(cd(0, 2 * kPi) * double(n) * z);
    return p;
}

}  // namespace

TEST(UpperHalfPlane, RejectsClosedLowerHalf) {
    EXPECT_THROW(UpperHalfPoint(0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(UpperHalfPoint(1.0, -1.0), std::invalid_argument);
    EXPECT_THROW(UpperHalfPoint(NAN, 1.0), std::invalid_argument);
    const UpperHalfPoint z(1.0, 2.0);
    EXPECT_EQ(z.half_plus_half(), UpperHalfPoint(1.0, 1.0));
    EXPECT_EQ(z.shifted(-1.0), UpperHalfPoint(0.0, 2.0));
}

TEST(Theta, BoundIsSoundOnRandomPoints) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> im(0.3, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const UpperHalfPoint z(re(rng), im(rng));
        const ComplexApprox t = theta_uhp(z, 1e-15);
        // a few more terms than the routine used must not move it past its bound
        const ComplexApprox longer = theta_uhp(z, 1e-15, static_cast<int>(t.cost) + 3);
        EXPECT_LE(std::abs(t.value() - longer.value()), t.error_bound + longer.error_bound);
        EXPECT_LE(std::abs(t.value() - theta_oracle(z.value())), t.error_bound + 1e-14);
    }
}

TEST(Theta, TruncatedSumKeepsHonestBound) {
    const UpperHalfPoint z(0.2, 0.1);
    const ComplexApprox few = theta_uhp(z, 1e-15, 2);
    EXPECT_GT(few.error_bound, 1e-3);
    EXPECT_LE(std::abs(few.value() - theta_oracle(z.value())), few.error_bound);
    EXPECT_LT(theta_tail_bound(5, 1.0), theta_tail_bound(4, 1.0));
}

TEST(Theta, ValueAtIFromGamma) {
    // theta(i) = pi^(1/4) / Gamma(3/4), with the library Gamma as oracle
    const ComplexApprox t = theta_uhp(UpperHalfPoint(0.0, 1.0));
    EXPECT_NEAR(t.re, std::pow(kPi, 0.25) / std::tgamma(0.75), 1e-15);
    EXPECT_EQ(t.im, 0.0);
}

TEST(Theta, PeriodTwoAndInversion) {
    for (const cd z : {cd(0.3, 0.8), cd(-1.7, 1.2), cd(0.05, 2.5)}) {
        const ComplexApprox t = theta_uhp(UpperHalfPoint(z));
        const ComplexApprox t2 = theta_uhp(UpperHalfPoint(z + 2.0));
        EXPECT_LE(std::abs(t.value() - t2.value()), t.error_bound + t2.error_bound + 1e-14);
        // theta(-1/z) = sqrt(-i z) theta(z)
        const ComplexApprox ti = theta_uhp(UpperHalfPoint(-1.0 / z));
        EXPECT_LE(std::abs(ti.value() - std::sqrt(cd(0, -1) * z) * t.value()), 1e-13);
    }
}

TEST(Theta, SquareIsTwoSquaresGeneratingFunction) {
    for (double y : {0.5, 1.0, 2.0}) {
        const double q = std::exp(-kPi * y);
        long double s = 1;
        long double qn = 1;
        for (std::int64_t n = 1; n <= 400; ++n) {
            qn *= q;
            s += r_divisor(n) * qn;
        }
        const ComplexApprox t = theta_uhp(UpperHalfPoint(0.0, y));
        EXPECT_NEAR(t.re * t.re, static_cast<double>(s), 1e-13) << y;
    }
}

TEST(Theta, QSeriesEvaluationAtTwoI) {
    // theta(2i) = sum_n q^(n^2) at q = e^(-2 pi)
    const QSeries s = theta_qseries(100);
    const double q = std::exp(-2 * kPi);
    double v = 0;
    for (std::size_t n = 100; n + 1 > 0; --n) v = v * q + s[n].convert_to<double>();
    EXPECT_NEAR(theta_uhp(UpperHalfPoint(0.0, 2.0)).re, v, 1e-15);
}

TEST(Eta, ValueAtIFromGamma) {
    const ComplexApprox e = eta_uhp(UpperHalfPoint(0.0, 1.0));
    EXPECT_NEAR(e.re, std::tgamma(0.25) / (2 * std::pow(kPi, 0.75)), 1e-15);
    EXPECT_NEAR(e.im, 0.0, 1e-17);
}

TEST(Eta, AgainstLongProductAndTransformations) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> re(-2.0, 2.0);
    std::uniform_real_distribution<double> im(0.4, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        const cd z(re(rng), im(rng));
        const ComplexApprox e = eta_uhp(UpperHalfPoint(z));
        EXPECT_LE(std::abs(e.value() - eta_oracle(z)), e.error_bound + 1e-14);
        const ComplexApprox e1 = eta_uhp(UpperHalfPoint(z + 1.0));
        EXPECT_NEAR(e1.abs(), e.abs(), e.error_bound + e1.error_bound + 1e-15);
        EXPECT_LE(std::abs(e1.value() - std::exp(cd(0, kPi / 12)) * e.value()), 1e-14);
        // eta(-1/z) = sqrt(-i z) eta(z)
        const cd w = -1.0 / z;
        if (w.imag() > 0.2) {
            const ComplexApprox ei = eta_uhp(UpperHalfPoint(w));
            EXPECT_LE(std::abs(ei.value() - std::sqrt(cd(0, -1) * z) * e.value()), 1e-13);
        }
    }
}

TEST(Eta, TinyValuesNearTheRealAxis) {
    // eta(i y) = y^(-1/2) eta(i / y), about 1e-113 at y = 1e-3
    const double y = 1e-3;
    const ComplexApprox e = eta_uhp(UpperHalfPoint(0.0, y));
    const double expected = eta_uhp(UpperHalfPoint(0.0, 1 / y)).re / std::sqrt(y);
    EXPECT_LT(expected, 1e-100);
    EXPECT_LE(std::abs(e.value() - expected), e.error_bound);
    EXPECT_LE(e.error_bound, 1e-15);
    EXPECT_THROW(eta_uhp(UpperHalfPoint(0.0, 1.0), 0.0), std::invalid_argument);
}

TEST(ThetaEtaQuotient, HoldsAcrossTheHalfPlane) {
    for (const cd z : {cd(0, 1), cd(0.3, 1.7), cd(0, 3), cd(-2.3, 0.5), cd(7.25, 0.9)}) {
        const VerificationRecord r = verify_theta_eta_quotient(UpperHalfPoint(z));
        EXPECT_TRUE(r.pass) << r.name << " " << r.abs_error;
        EXPECT_EQ(r.rhs, 0.0);
        EXPECT_LE(r.abs_error, 1e-12);
    }
    EXPECT_EQ(verify_theta_eta_quotient(UpperHalfPoint(0.3, 1.7)).name, "theta-eta quotient at z=0.3+1.7i");
}
