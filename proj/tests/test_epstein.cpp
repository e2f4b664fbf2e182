#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "thetaval/epstein.hpp"
#include "thetaval/special_values.hpp"

using namespace thetaval;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<BinaryQuadraticForm> kForms = {{1, 0, 1}, {2, -2, 1}, {1, 0, 2}, {1, 1, 1}};

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int k = 1; k < n; ++k) s += (k % 2 ? 4 : 2) * f(a + k * h);
    return s * h / 3;
}

// sum over n in Z of e^(-c t n^2)
double theta1d(double t, double c) {
    double s = 1;
    for (int n = 1; n < 400; ++n) {
        const double term = std::exp(-c * t * n * n);
        s += 2 * term;
        if (term < 1e-300) break;
    }
    return s;
}

// sum_{(m,n) != 0} e^(-t Q(m,n)) for the separable forms x^2 + c y^2
double lattice_heat(double t, double c) { return theta1d(t, 1.0) * theta1d(t, c) - 1; }

}  // namespace

TEST(Form, ValidatesAndReports) {
    EXPECT_THROW(BinaryQuadraticForm(0, 0, 1), std::invalid_argument);
    EXPECT_THROW(BinaryQuadraticForm(1, 2, 1), std::invalid_argument);
    EXPECT_THROW(BinaryQuadraticForm(-1, 0, -1), std::invalid_argument);
    const BinaryQuadraticForm q(2, -2, 1);
    EXPECT_EQ(q.discriminant(), 4);
    EXPECT_EQ(q(1, 1), 1);
    EXPECT_EQ(q.to_string(), "2,-2,1");
    EXPECT_EQ(BinaryQuadraticForm(0.5, 0, 3).to_string(), "0.5,0,3");
}

TEST(Form, RootIdentities) {
    for (const auto& q : kForms) {
        const std::complex<double> z = q.z_q().value();
        EXPECT_GT(z.imag(), 0);
        EXPECT_NEAR(q.a() * std::norm(z), q.c(), 1e-15);
        EXPECT_NEAR(q.a() * 2 * z.real(), -q.b(), 1e-15);
        EXPECT_NEAR(std::abs(q.a() * z * z + q.b() * z + q.c()), 0.0, 1e-15);
    }
}

TEST(Form, DualForm) {
    for (const auto& q : kForms) {
        const BinaryQuadraticForm d = q.dual();
        EXPECT_NEAR(d.discriminant() * q.discriminant(), 16.0, 1e-13);
        const BinaryQuadraticForm back = d.dual();
        EXPECT_NEAR(back.a(), q.a(), 1e-14);
        EXPECT_NEAR(back.b(), q.b(), 1e-14);
        EXPECT_NEAR(back.c(), q.c(), 1e-14);
        const double lam = q.min_eigenvalue();
        // eigenvalues multiply to D/4 and add to a + c
        EXPECT_NEAR(lam + q.discriminant() / (4 * lam), q.a() + q.c(), 1e-14);
    }
}

TEST(LatticeCount, BoundsTheTrueCount) {
    for (const auto& q : kForms) {
        const detail::LatticeCount lc = detail::lattice_count_bound(q);
        for (double u : {0.5, 1.0, 3.0, 10.0, 100.0, 2500.0}) {
            const std::int64_t r = detail::ring_radius_for_level(q, u);
            std::int64_t count = 1;
            for (std::int64_t m = -r - 1; m <= r + 1; ++m)
                for (std::int64_t n = -r - 1; n <= r + 1; ++n)
                    if ((m != 0 || n != 0) && evaluate(q, {m, n}) <= u) ++count;
            EXPECT_LE(count, lc.area * u + lc.boundary * std::sqrt(u) + lc.corner) << q.to_string() << " u=" << u;
        }
    }
}

TEST(IncompleteGamma, ClosedForms) {
    for (double x : {0.1, 0.7, 2.0, 5.0, 30.0}) {
        const double half = std::sqrt(kPi) * std::erfc(std::sqrt(x));
        EXPECT_NEAR(upper_incomplete_gamma(0.5, x).value, half, 1e-14 * std::max(1.0, half)) << x;
        const double three_halves = 0.5 * half + std::sqrt(x) * std::exp(-x);
        EXPECT_NEAR(upper_incomplete_gamma(1.5, x).value, three_halves, 1e-14) << x;
        EXPECT_NEAR(upper_incomplete_gamma(1.0, x).value, std::exp(-x), 1e-15) << x;
        EXPECT_NEAR(upper_incomplete_gamma(3.0, x).value, 2 * std::exp(-x) * (1 + x + x * x / 2), 1e-14) << x;
        // Gamma(s+1, x) = s Gamma(s, x) + x^s e^-x at s = -1/2
        const double minus_half = (half - std::exp(-x) / std::sqrt(x)) / -0.5;
        EXPECT_NEAR(upper_incomplete_gamma_cf(-0.5, x).value, minus_half, 1e-13 * std::abs(minus_half)) << x;
    }
    const ApproxValue g = upper_incomplete_gamma(1.5, 2.0);
    EXPECT_LE(std::abs(g.value - 0.23171655200098069), g.error_bound);
    EXPECT_THROW(upper_incomplete_gamma(0.0, 1.0), std::domain_error);
    EXPECT_THROW(upper_incomplete_gamma_cf(1.0, 0.0), std::domain_error);
}

TEST(EpsteinParts, SmallTimeTermsMatchHeatTraceIntegral) {
    // elementary + dual = int_0^lambda t^(s-1) sum_{n != 0} e^(-t Q(n)) dt.
    // Below t0 the sum is (2 pi / sqrt D) / t - 1 up to e^(-pi^2 / (t0 c)),
    // so that stretch is integrated in closed form.
    for (double c : {1.0, 2.0}) {
        const BinaryQuadraticForm q(1, 0, c);
        const double area = 2 * kPi / std::sqrt(q.discriminant());
        for (double s : {1.5, 2.0}) {
            const double lambda = 2 * kPi / std::sqrt(q.discriminant());
            const EpsteinParts p = epstein_parts(q, s, 1e-14, lambda);
            const double t0 = 0.01;
            const double head = area * std::pow(t0, s - 1) / (s - 1) - std::pow(t0, s) / s;
            const double body = simpson([&](double u) { const double t = std::exp(u); return std::pow(t, s) * lattice_heat(t, c); },
                                        std::log(t0), std::log(lambda), 20000);
            EXPECT_NEAR(p.elementary.value + p.dual.value, head + body, 1e-11) << c << " " << s;
        }
    }
}

TEST(EpsteinParts, LargeTimeTermMatchesHeatTraceIntegral) {
    const BinaryQuadraticForm q(1, 0, 1);
    const double s = 2.0;
    const double lambda = 2 * kPi / std::sqrt(q.discriminant());
    const EpsteinParts p = epstein_parts(q, s, 1e-14, lambda);
    const double body = simpson([&](double u) { const double t = std::exp(u); return std::pow(t, s) * lattice_heat(t, 1.0); },
                                std::log(lambda), std::log(60.0), 20000);
    EXPECT_NEAR(p.primal.value, body, 1e-12);
}

TEST(EpsteinParts, TotalIndependentOfSplit) {
    const BinaryQuadraticForm q(1, 1, 1);
    const double s = 1.7;
    double first = 0;
    for (double lambda : {1.0, 2.0, 4.0, 7.0}) {
        const EpsteinParts p = epstein_parts(q, s, 1e-15, lambda);
        const double total = (p.primal.value + p.elementary.value + p.dual.value) / p.gamma_s;
        if (lambda == 1.0) first = total;
        EXPECT_NEAR(total, first, 1e-12) << lambda;
    }
}

TEST(EpsteinDirect, SumOfTwoSquaresAtTwo) {
    const double expected = 4 * zeta(2.0).value * L_chi4(2.0).value;
    const ApproxValue d = epstein_direct({1, 0, 1}, 2.0, 2000);
    EXPECT_NEAR(d.value, expected, 1e-8);
    EXPECT_LE(std::abs(d.value - expected), d.error_bound);
}

TEST(EpsteinDirect, RejectsBadArguments) {
    EXPECT_THROW(epstein_direct({1, 0, 1}, 1.0, 100), std::domain_error);
    EXPECT_THROW(epstein_direct({1, 0, 1}, 2.0, 7), std::invalid_argument);
}

TEST(EpsteinAccelerated, BruteForceSquareAtThree) {
    // every lattice point in the square of radius R; the points outside
    // have Q > 3 R^2 / 4 and add up to about 2e-13
    const BinaryQuadraticForm q(1, 1, 1);
    constexpr std::int64_t kR = 2000;
    long double sum = 0;
    for (std::int64_t r = kR; r >= 1; --r) {
        for (std::int64_t m = -r; m <= r; ++m) {
            for (std::int64_t n : {-r, r}) {
                const long double v = evaluate(q, {m, n});
                sum += 1 / (v * v * v);
            }
        }
        for (std::int64_t n = -r + 1; n <= r - 1; ++n) {
            for (std::int64_t m : {-r, r}) {
                const long double v = evaluate(q, {m, n});
                sum += 1 / (v * v * v);
            }
        }
    }
    EXPECT_NEAR(epstein_accelerated(q, 3.0).value, static_cast<double>(sum), 1e-12);
}

TEST(EpsteinAccelerated, DirichletSeriesFactorization) {
    for (double s : {1.5, 2.0, 3.0, 1 + std::ldexp(1.0, -10)}) {
        const ApproxValue e = epstein_accelerated({1, 0, 1}, s);
        const double expected = 4 * zeta(s).value * L_chi4(s).value;
        EXPECT_NEAR(e.value, expected, 1e-9 * std::max(1.0, expected)) << s;
    }
}

TEST(EpsteinAccelerated, ScalingSwapAndUnimodularInvariance) {
    for (const auto& q : kForms) {
        for (double s : {1.25, 2.0}) {
            const ApproxValue base = epstein_accelerated(q, s);
            for (double mu : {2.0, 5.0}) {
                const ApproxValue scaled = epstein_accelerated(q.scaled(mu), s);
                EXPECT_NEAR(scaled.value, std::pow(mu, -s) * base.value, scaled.error_bound + base.error_bound + 1e-14);
            }
            const ApproxValue swapped = epstein_accelerated({q.c(), q.b(), q.a()}, s);
            EXPECT_NEAR(swapped.value, base.value, swapped.error_bound + base.error_bound + 1e-14);
            // (x, y) -> (x + y, y)
            const ApproxValue sheared = epstein_accelerated({q.a(), 2 * q.a() + q.b(), q.a() + q.b() + q.c()}, s);
            EXPECT_NEAR(sheared.value, base.value, sheared.error_bound + base.error_bound + 1e-14);
        }
    }
    // x^2 + y^2 against x^2 + (x - y)^2 = 2x^2 - 2xy + y^2
    EXPECT_NEAR(epstein_accelerated({1, 0, 1}, 1.5).value, epstein_accelerated({2, -2, 1}, 1.5).value, 1e-12);
}

TEST(EpsteinAccelerated, EnginesAgreeOnGrid) {
    for (const auto& q : kForms) {
        for (double s : {1.25, 1.5, 2.0, 3.0}) {
            const ApproxValue d = epstein_direct(q, s, 1000);
            const ApproxValue a = epstein_accelerated(q, s);
            EXPECT_LE(std::abs(d.value - a.value), d.error_bound + a.error_bound) << q.to_string() << " s=" << s;
        }
    }
}

TEST(EpsteinAccelerated, NearThePole) {
    // (s - 1) zeta(s, Q) -> 2 pi / sqrt(D)
    for (const auto& q : kForms) {
        const double eps = 1e-6;
        const ApproxValue e = epstein_accelerated(q, 1 + eps);
        EXPECT_NEAR(eps * e.value, 2 * kPi / std::sqrt(q.discriminant()), 1e-4) << q.to_string();
    }
}

TEST(EpsteinAccelerated, Errors) {
    EXPECT_THROW(epstein_accelerated({1, 0, 1}, 1.0), std::domain_error);
    EXPECT_THROW(epstein_accelerated({1, 0, 1}, 2.0, 0.0), std::invalid_argument);
    EXPECT_THROW(epstein_accelerated({1, 0, 1}, 2.0, 1e-18), NonConvergence);
}
