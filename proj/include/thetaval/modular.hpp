#pragma once

// theta(z) = sum_n e^(pi i n^2 z) and eta(z) = e^(pi i z / 12) prod (1 - e^(2 pi i n z))
// on the upper half-plane. Truncation points come from closed-form
// geometric tail bounds, so error_bound is a bound and not a stopping guess.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "thetaval/approx.hpp"
#include "thetaval/format.hpp"
#include "thetaval/upper_half_plane.hpp"
#include "thetaval/verification.hpp"

namespace thetaval {

struct ComplexApprox {
    double re = 0.0;
    double im = 0.0;
    double error_bound = 0.0;
    std::int64_t cost = 0;

    [[nodiscard]] std::complex<double> value() const { return {re, im}; }
    [[nodiscard]] double abs() const { return std::abs(value()); }
    /// |z| with the modulus error bound (|(|a| - |b|)| <= |a - b|).
    [[nodiscard]] ApproxValue modulus() const { return {abs(), error_bound + kEps * abs(), cost}; }
};

namespace detail {

/// e^(i pi t) with t reduced mod 2 first, so large t keeps its phase.
inline std::complex<double> unit_phase_pi(double t) {
    const double r = std::fmod(t, 2.0);
    return {std::cos(std::numbers::pi * r), std::sin(std::numbers::pi * r)};
}

inline void require_tol_modular(double tol, const char* who) {
    if (!(tol > 0)) throw std::invalid_argument(std::string(who) + ": tol must be positive");
}

}  // namespace detail

/// Tail bound 2 e^(-pi N^2 y) / (1 - e^(-pi (2N+1) y)) for the theta series
/// cut at |n| <= N.
inline double theta_tail_bound(int n, double y) {
    const double nd = n;
    return 2 * std::exp(-std::numbers::pi * nd * nd * y) / -std::expm1(-std::numbers::pi * (2 * nd + 1) * y);
}

/// theta(z) summed over |n| <= N with the smallest N >= 1 whose tail bound
/// is at most tol. When max_terms is positive it overrides N.
inline ComplexApprox theta_uhp(const UpperHalfPoint& z, double tol = 1e-15, int max_terms = 0) {
    detail::require_tol_modular(tol, "theta_uhp");
    int n_max = max_terms;
    if (n_max <= 0) {
        n_max = 1;
        while (theta_tail_bound(n_max, z.im()) > tol) ++n_max;
    }
    CompensatedSum re;
    CompensatedSum im;
    re.add(1.0);
    for (int n = 1; n <= n_max; ++n) {
        const double n2 = static_cast<double>(n) * n;
        const std::complex<double> t = 2 * std::exp(-std::numbers::pi * n2 * z.im()) * detail::unit_phase_pi(n2 * z.re());
        re.add(t.real());
        im.add(t.imag());
    }
    const double rounding = 4 * kEps * (re.magnitude() + im.magnitude());
    return {re.value(), im.value(), theta_tail_bound(n_max, z.im()) + rounding, n_max};
}

/// Relative error of the eta product cut after N factors:
/// |prod_{n>N} (1 - w^n) - 1| <= exp(sum_{n>N} |w|^n) - 1.
inline double eta_tail_relative(int n, double y) {
    const double r = std::exp(-2 * std::numbers::pi * y);
    return std::expm1(std::pow(r, n + 1) / -std::expm1(-2 * std::numbers::pi * y));
}

/// eta(z) with the product cut at the smallest N whose tail bound, scaled by
/// the current modulus, is at most tol.
inline ComplexApprox eta_uhp(const UpperHalfPoint& z, double tol = 1e-15) {
    detail::require_tol_modular(tol, "eta_uhp");
    const std::complex<double> prefactor = std::exp(-std::numbers::pi * z.im() / 12) * detail::unit_phase_pi(z.re() / 12);
    std::complex<double> product = prefactor;
    int n = 0;
    constexpr int kMaxFactors = 1 << 20;
    while (std::abs(product) * eta_tail_relative(n, z.im()) > tol) {
        if (n >= kMaxFactors) throw NonConvergence("eta_uhp: imaginary part too small", product.real(), std::abs(product));
        ++n;
        const double nd = n;
        const std::complex<double> w_n = std::exp(-2 * std::numbers::pi * nd * z.im()) * detail::unit_phase_pi(2 * nd * z.re());
        product *= 1.0 - w_n;
    }
    const double tail = std::abs(product) * eta_tail_relative(n, z.im());
    const double rounding = 4 * kEps * (n + 2) * std::abs(product);
    return {product.real(), product.imag(), tail + rounding, n};
}

/// Checks theta(z) = eta(z/2 + 1/2)^2 / eta(z + 1). The identity is complex,
/// so the record compares the modulus of the residual against zero.
inline VerificationRecord verify_theta_eta_quotient(const UpperHalfPoint& z, double tol = 1e-12) {
    detail::require_tol_modular(tol, "verify_theta_eta_quotient");
    const ComplexApprox theta = theta_uhp(z, tol / 4);
    const ComplexApprox num = eta_uhp(z.half_plus_half(), tol / 4);
    const ComplexApprox den = eta_uhp(z.shifted(1.0), tol / 4);

    const std::complex<double> quotient = num.value() * num.value() / den.value();
    const double e_num = 2 * num.abs() * num.error_bound + num.error_bound * num.error_bound;
    const double den_lo = den.abs() - den.error_bound;
    const double e_quot = den_lo > 0 ? (e_num + std::abs(quotient) * den.error_bound) / den_lo
                                     : std::numeric_limits<double>::infinity();
    const double bound = theta.error_bound + e_quot + 8 * kEps * std::abs(quotient);

    const double residual = std::abs(theta.value() - quotient);
    return make_record("theta-eta quotient at z=" + format_shortest(z.re()) + "+" + format_shortest(z.im()) + "i",
                       "theta = eta^2(z/2+1/2) / eta(z+1)", residual, 0.0, bound, tol);
}

}  // namespace thetaval
