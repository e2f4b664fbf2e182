#pragma once

// The concrete integrals: I = (1/pi) int_0^inf log t / cosh t dt, the Gamma
// integral, the Gamma*L integral over 1/(2 cosh t), and the full-line
// integrals of Q(x, 1)^(-s) and log Q(x, 1) / Q(x, 1).

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "thetaval/approx.hpp"
#include "thetaval/form.hpp"
#include "thetaval/quadrature.hpp"

namespace thetaval {

inline constexpr double kDefaultTol = 1e-12;

namespace detail {

/// 1 / cosh t without overflow for large t.
inline double sech(double t) {
    const double e = std::exp(-std::abs(t));
    return 2 * e / (1 + e * e);
}

inline void require_tol(double tol, const char* who) {
    if (!(tol > 0)) throw std::invalid_argument(std::string(who) + ": tol must be positive");
}

}  // namespace detail

/// I = (1/pi) int_0^inf log(t) / cosh(t) dt, split at t = 1.
inline ApproxValue integral_I(double tol = kDefaultTol) {
    detail::require_tol(tol, "integral_I");
    auto f = [](double t) { return std::log(t) * detail::sech(t); };
    const double part_tol = 0.5 * std::numbers::pi * tol;
    const ApproxValue near = integrate({f, FiniteInterval{0.0, 1.0}, EndpointHint::log_singular, EndpointHint::smooth, part_tol});
    const ApproxValue far = integrate({f, HalfLine{1.0}, EndpointHint::smooth, EndpointHint::smooth, part_tol});
    return (1 / std::numbers::pi) * (near + far);
}

/// Gamma(s) = int_0^inf t^(s-1) e^(-t) dt for s > 0.
inline ApproxValue gamma_integral(double s, double tol = kDefaultTol) {
    if (!(s > 0)) throw std::domain_error("gamma_integral: s must be positive");
    detail::require_tol(tol, "gamma_integral");
    auto f = [s](double t) { return std::exp((s - 1) * std::log(t) - t); };
    const EndpointHint at_zero = s < 1 ? EndpointHint::algebraic_singular : EndpointHint::smooth;
    return integrate({f, HalfLine{0.0}, at_zero, EndpointHint::smooth, tol});
}

/// int_0^inf t^(s-1) / (2 cosh t) dt = Gamma(s) L(s, chi_4).
inline ApproxValue gammaL_integral(double s, double tol = kDefaultTol) {
    if (!(s > 0)) throw std::domain_error("gammaL_integral: s must be positive");
    detail::require_tol(tol, "gammaL_integral");
    auto f = [s](double t) {
        const double e = std::exp(-2 * t);
        return std::exp((s - 1) * std::log(t) - t) / (1 + e);
    };
    const EndpointHint at_zero = s < 1 ? EndpointHint::algebraic_singular : EndpointHint::smooth;
    return integrate({f, HalfLine{0.0}, at_zero, EndpointHint::smooth, tol});
}

namespace detail {

/// int over R of g(Q(x, 1)) dx, split at the minimum x0 = -b / (2a) of the
/// quadratic and mapped to two half-lines in t = |x - x0|.
template <class G>
ApproxValue full_line_of_form(const BinaryQuadraticForm& q, G g, double tol) {
    const double x0 = -q.b() / (2 * q.a());
    auto right = [&q, g, x0](double t) { return g(q(x0 + t, 1.0)); };
    auto left = [&q, g, x0](double t) { return g(q(x0 - t, 1.0)); };
    const ApproxValue r = integrate({right, HalfLine{0.0}, EndpointHint::smooth, EndpointHint::smooth, 0.5 * tol});
    const ApproxValue l = integrate({left, HalfLine{0.0}, EndpointHint::smooth, EndpointHint::smooth, 0.5 * tol});
    return r + l;
}

}  // namespace detail

/// f(s) = -int_R Q(x, 1)^(-s) dx, defined for s > 1/2.
inline ApproxValue f_form(const BinaryQuadraticForm& q, double s, double tol = kDefaultTol) {
    if (!(s > 0.5)) throw std::domain_error("f_form: s must exceed 1/2");
    detail::require_tol(tol, "f_form");
    return -detail::full_line_of_form(q, [s](double p) { return std::pow(p, -s); }, tol);
}

/// f'(1) = int_R log Q(x, 1) / Q(x, 1) dx, by direct quadrature.
inline ApproxValue f_form_derivative_at_1(const BinaryQuadraticForm& q, double tol = kDefaultTol) {
    detail::require_tol(tol, "f_form_derivative_at_1");
    return detail::full_line_of_form(q, [](double p) { return std::log(p) / p; }, tol);
}

}  // namespace thetaval
