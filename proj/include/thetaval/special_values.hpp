#pragma once

// Scalar special values for real arguments: the Euler-Mascheroni constant,
// the Riemann zeta function for s > 1, L(s, chi_4) and L'(1, chi_4), and
// Gamma through Gauss's product.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "thetaval/acceleration.hpp"
#include "thetaval/approx.hpp"

namespace thetaval {

/// Laurent data at s = 1: principal / (s - 1) + constant + O(s - 1).
struct LaurentAtOne {
    double principal;
    ApproxValue constant;
};

namespace detail {

// B_2, B_4, B_6, B_8 and the first omitted one, B_10.
inline constexpr std::array<double, 4> kBernoulli = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
inline constexpr double kBernoulli10 = 5.0 / 66;

inline void require_positive_tol(double tol, const char* who) {
    if (!(tol > 0)) throw std::invalid_argument(std::string(who) + ": tol must be positive");
}

/// H_n - log n - 1/(2n) + sum_k B_2k / (2k n^2k), plus the first omitted
/// correction as the truncation bound.
inline ApproxValue harmonic_minus_log(std::int64_t n) {
    CompensatedSum h;
    for (std::int64_t k = n; k >= 1; --k) h.add(1.0 / static_cast<double>(k));
    const auto nd = static_cast<double>(n);
    h.add(-std::log(nd));
    h.add(-0.5 / nd);
    double npow = nd * nd;
    for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
        const double twok = 2.0 * static_cast<double>(k + 1);
        h.add(kBernoulli[k] / (twok * npow));
        npow *= nd * nd;
    }
    const double omitted = kBernoulli10 / (10 * npow);
    return {h.value(), std::abs(omitted) + h.rounding_bound() + 2 * kEps * std::log(nd), n};
}

}  // namespace detail

/// Euler-Mascheroni constant from lim (H_n - log n), Euler-Maclaurin
/// corrected through B_8. Never tabulated.
inline ApproxValue euler_gamma(double tol = 1e-12) {
    detail::require_positive_tol(tol, "euler_gamma");
    ApproxValue best{};
    for (std::int64_t n = 16; n <= (1 << 20); n *= 2) {
        best = detail::harmonic_minus_log(n);
        if (meets(best, tol)) return best;
    }
    throw NonConvergence("euler_gamma: tolerance below rounding floor", best.value, best.error_bound);
}

/// Riemann zeta for real s > 1 by Euler-Maclaurin:
///   sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2 + sum_{k<=4} B_2k/(2k)! (s)_{2k-1} N^(-s-2k+1)
/// with N = 64, doubled only if the omitted B_10 term exceeds tol. The cost
/// does not depend on s - 1.
inline ApproxValue zeta(double s, double tol = 1e-12) {
    if (!(s > 1)) throw std::domain_error("zeta: s must exceed 1");
    detail::require_positive_tol(tol, "zeta");
    ApproxValue best{};
    for (std::int64_t n_terms = 64; n_terms <= (1 << 20); n_terms *= 2) {
        const auto big_n = static_cast<double>(n_terms);
        CompensatedSum sum;
        for (std::int64_t n = n_terms - 1; n >= 1; --n) sum.add(std::pow(static_cast<double>(n), -s));
        const double log_n = std::log(big_n);
        sum.add(std::exp((1 - s) * log_n) / (s - 1));
        const double n_to_minus_s = std::exp(-s * log_n);
        sum.add(0.5 * n_to_minus_s);

        // (s)_{2k-1} / (2k)! * N^(-s-2k+1), built incrementally
        double rising = s;                  // (s)_1
        double factorial = 2.0;             // 2!
        double power = n_to_minus_s / big_n;  // N^(-s-1)
        for (std::size_t k = 0; k < detail::kBernoulli.size(); ++k) {
            sum.add(detail::kBernoulli[k] * rising / factorial * power);
            const double m = 2.0 * static_cast<double>(k + 1);  // current 2k
            rising *= (s + m - 1) * (s + m);
            factorial *= (m + 1) * (m + 2);
            power /= big_n * big_n;
        }
        const double omitted = std::abs(detail::kBernoulli10 * rising / factorial * power);
        const double v = sum.value();
        best = {v, 2 * omitted + sum.rounding_bound() + 4 * kEps * std::abs(v), n_terms};
        if (meets(best, tol)) return best;
    }
    throw NonConvergence("zeta: tolerance below rounding floor", best.value, best.error_bound);
}

/// zeta(2s - 1), the companion term of the Kronecker limit.
inline ApproxValue zeta_2s_minus_1(double s, double tol = 1e-12) {
    if (!(s > 1)) throw std::domain_error("zeta_2s_minus_1: s must exceed 1");
    return zeta(2 * s - 1, tol);
}

/// Laurent data of zeta at 1: 1/(s-1) + gamma.
inline LaurentAtOne zeta_laurent_at_one(double tol = 1e-12) { return {1.0, euler_gamma(tol)}; }

/// L(s, chi_4) = sum_{k>=0} (-1)^k (2k+1)^-s for s > 0.
inline ApproxValue L_chi4(double s, double tol = 1e-12) {
    if (!(s > 0)) throw std::domain_error("L_chi4: s must be positive");
    detail::require_positive_tol(tol, "L_chi4");
    return alternating_sum([s](int k) { return std::pow(2.0 * k + 1, -s); }, tol);
}

/// L'(1, chi_4) = -sum_{k>=0} (-1)^k log(2k+1) / (2k+1).
inline ApproxValue L_chi4_prime_at_1(double tol = 1e-12) {
    detail::require_positive_tol(tol, "L_chi4_prime_at_1");
    return -alternating_sum(
        [](int k) {
            const double m = 2.0 * k + 1;
            return std::log(m) / m;
        },
        tol);
}

/// Gamma(s) for s > 0 from Gauss's product n! n^s / (s (s+1) ... (s+n)).
/// The product has an O(1/n) defect; one Richardson step 2 G(2n) - G(n)
/// removes it, and n doubles until successive extrapolants agree to tol.
inline ApproxValue gamma_gauss(double s, double tol = 1e-12) {
    if (!(s > 0)) throw std::domain_error("gamma_gauss: s must be positive");
    detail::require_positive_tol(tol, "gamma_gauss");
    constexpr std::int64_t kFirst = 1 << 10;
    constexpr std::int64_t kLast = 1 << 24;

    CompensatedSum log_terms;  // sum_{k<=n} log(1 + s/k)
    std::int64_t k = 0;
    auto gauss_at = [&](std::int64_t n) {
        while (k < n) {
            ++k;
            log_terms.add(std::log1p(s / static_cast<double>(k)));
        }
        const double log_g = s * std::log(static_cast<double>(n)) - std::log(s) - log_terms.value();
        return std::exp(log_g);
    };

    double g_prev = gauss_at(kFirst);
    double r_prev = std::numeric_limits<double>::quiet_NaN();
    double bound = std::numeric_limits<double>::infinity();
    for (std::int64_t n = 2 * kFirst; n <= kLast; n *= 2) {
        const double g = gauss_at(n);
        const double r = 2 * g - g_prev;
        if (!std::isnan(r_prev)) {
            const double log_mag = std::abs(s * std::log(static_cast<double>(n))) + std::abs(std::log(s)) + log_terms.magnitude();
            const double rounding = std::abs(r) * 8 * kEps * log_mag;
            bound = std::abs(r - r_prev) + rounding;
            if (meets({r, bound, k}, tol)) return {r, bound, k};
        }
        g_prev = g;
        r_prev = r;
    }
    throw NonConvergence("gamma_gauss: product length limit reached", r_prev, bound);
}

}  // namespace thetaval
