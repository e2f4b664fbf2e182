#pragma once

// Both sides of the Kronecker limit formula
//
//   lim_{s->1+} (sqrt(D)/(4 pi)) zeta(s, Q) - zeta(2s - 1) = log( sqrt(a/D) / |eta(z_Q)|^2 ),
//
// computed by routes that share nothing: the left side extrapolates Epstein
// zeta values to s = 1 and never touches eta; the right side evaluates eta at
// z_Q and never touches zeta(s, Q). Also the theta(i) assembly built on top.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetaval/acceleration.hpp"
#include "thetaval/approx.hpp"
#include "thetaval/epstein.hpp"
#include "thetaval/form.hpp"
#include "thetaval/integrals.hpp"
#include "thetaval/modular.hpp"
#include "thetaval/special_values.hpp"
#include "thetaval/verification.hpp"

namespace thetaval {

struct ExtrapolationSettings {
    double eps0 = 0.1;
    int nodes = 8;
    /// tolerance handed to the engines for every sample
    double sample_tol = 1e-13;
};

namespace detail {

template <class G>
ExtrapolationTable extrapolate_to_one(G&& g, const ExtrapolationSettings& cfg) {
    const std::vector<double> eps = geometric_nodes(cfg.eps0, cfg.nodes);
    std::vector<double> values;
    std::vector<double> errors;
    for (double e : eps) {
        const ApproxValue v = g(e);
        values.push_back(v.value);
        errors.push_back(v.error_bound);
    }
    return richardson_to_zero(eps, std::move(values), errors);
}

inline ApproxValue checked(const ExtrapolationTable& t, double tol, const char* who) {
    if (!(t.error_bound <= tol)) throw NonConvergence(std::string(who) + ": extrapolation did not stabilize", t.extrapolated, t.error_bound);
    return {t.extrapolated, t.error_bound, static_cast<std::int64_t>(t.values.size())};
}

}  // namespace detail

/// Samples g(eps) = (sqrt(D)/(4 pi)) zeta(1+eps, Q) - zeta(1+2eps) at
/// eps_k = eps0 2^-k and extrapolates to eps = 0. The poles 1/(2 eps) cancel,
/// so g is analytic at 0.
inline ExtrapolationTable kronecker_lhs_table(const BinaryQuadraticForm& q, const ExtrapolationSettings& cfg = {}) {
    const double scale = std::sqrt(q.discriminant()) / (4 * std::numbers::pi);
    return detail::extrapolate_to_one(
        [&](double e) {
            const ApproxValue z_form = epstein_accelerated(q, 1 + e, cfg.sample_tol);
            const ApproxValue z_companion = zeta_2s_minus_1(1 + e, cfg.sample_tol);
            return scale * z_form - z_companion;
        },
        cfg);
}

inline ApproxValue kronecker_lhs(const BinaryQuadraticForm& q, double tol = 1e-8, const ExtrapolationSettings& cfg = {}) {
    if (!(tol > 0)) throw std::invalid_argument("kronecker_lhs: tol must be positive");
    return detail::checked(kronecker_lhs_table(q, cfg), tol, "kronecker_lhs");
}

/// log( sqrt(a/D) / |eta(z_Q)|^2 ).
inline ApproxValue kronecker_rhs(const BinaryQuadraticForm& q, double tol = 1e-12) {
    if (!(tol > 0)) throw std::invalid_argument("kronecker_rhs: tol must be positive");
    const ApproxValue eta_abs = eta_uhp(q.z_q(), tol / 8).modulus();
    const ApproxValue log_eta = log(eta_abs);
    return exact(0.5 * std::log(q.a() / q.discriminant())) - 2.0 * log_eta;
}

/// pi sqrt(D) / (12 a) - sum_{k>=1} log |1 - e^(2 pi i k z_Q)|^2, cut where
/// the geometric tail 2 r^(K+1) / ((1 - r)(1 - r^(K+1))), r = |e^(2 pi i z_Q)|,
/// drops below tol.
inline ApproxValue l1_series(const BinaryQuadraticForm& q, double tol = 1e-12) {
    if (!(tol > 0)) throw std::invalid_argument("l1_series: tol must be positive");
    const double sqrt_d = std::sqrt(q.discriminant());
    const UpperHalfPoint z = q.z_q();
    const double r = std::exp(-2 * std::numbers::pi * z.im());
    auto tail = [r](int k) {
        const double rk1 = std::pow(r, k + 1);
        return 2 * rk1 / ((1 - r) * (1 - rk1));
    };
    CompensatedSum sum;
    sum.add(std::numbers::pi * sqrt_d / (12 * q.a()));
    int k = 0;
    while (tail(k) > tol / 2) {
        ++k;
        const double kd = k;
        const std::complex<double> w = std::exp(-2 * std::numbers::pi * kd * z.im()) *
                                       std::complex<double>(std::cos(2 * std::numbers::pi * std::fmod(kd * z.re(), 1.0)),
                                                            std::sin(2 * std::numbers::pi * std::fmod(kd * z.re(), 1.0)));
        // |1 - w|^2 = 1 - 2 Re w + |w|^2
        sum.add(-std::log1p(std::norm(w) - 2 * w.real()));
    }
    const double v = sum.value();
    return {v, tail(k) + sum.rounding_bound() + 4 * kEps * (k + 1) * sum.magnitude(), k};
}

/// Samples h(eps) = (2/pi) zeta(1+eps) L(1+eps) - zeta(1+2eps) and
/// extrapolates to eps = 0.
inline ExtrapolationTable target_limit_table(const ExtrapolationSettings& cfg = {}) {
    return detail::extrapolate_to_one(
        [&](double e) {
            const ApproxValue z = zeta(1 + e, cfg.sample_tol);
            const ApproxValue l = L_chi4(1 + e, cfg.sample_tol);
            return (2 / std::numbers::pi) * (z * l) - zeta_2s_minus_1(1 + e, cfg.sample_tol);
        },
        cfg);
}

/// The extrapolated limit of (2/pi) zeta(s) L(s) - zeta(2s-1) at s = 1
/// against I = (1/pi) int_0^inf log t / cosh t dt.
inline VerificationRecord target_limit_check(double tol = 1e-8, const ExtrapolationSettings& cfg = {}) {
    if (!(tol > 0)) throw std::invalid_argument("target_limit_check: tol must be positive");
    const ApproxValue limit = detail::checked(target_limit_table(cfg), tol, "target_limit_check");
    const ApproxValue i = integral_I(std::min(tol, 1e-12));
    return make_record("target limit", "lim (2/pi) zeta(s) L(s) - zeta(2s-1) = I", limit.value, i.value,
                       limit.error_bound + i.error_bound, tol);
}

/// Three independent values of d/ds Gamma(s) L(s) at s = 1.
struct DerivativeRoutes {
    ApproxValue from_series;      // -gamma pi / 4 + L'(1)
    ApproxValue from_difference;  // central difference of the Gamma*L integral
    ApproxValue from_integral;    // (pi / 2) I
};

inline DerivativeRoutes derivative_routes(double tol = 1e-12, double step = 1e-4) {
    DerivativeRoutes out;
    out.from_series = (-std::numbers::pi / 4) * euler_gamma(tol) + L_chi4_prime_at_1(tol);

    // D(h) = (F(1+h) - F(1-h)) / 2h. Its O(h^2) truncation is about a third of
    // |D(h) - D(2h)|; the whole difference is used as the bound.
    auto central = [tol](double h) {
        const ApproxValue up = gammaL_integral(1 + h, tol / 10);
        const ApproxValue down = gammaL_integral(1 - h, tol / 10);
        return (1 / (2 * h)) * (up - down);
    };
    const ApproxValue d1 = central(step);
    const ApproxValue d2 = central(2 * step);
    out.from_difference = {d1.value, d1.error_bound + std::abs(d1.value - d2.value) + d2.error_bound, d1.cost + d2.cost};

    out.from_integral = (std::numbers::pi / 2) * integral_I(tol);
    return out;
}

/// theta(i) four ways: (A) the theta series, (B) sqrt 2 |eta(i)|,
/// (C) (2 pi)^(-1/4) sqrt(Gamma(1/4) / Gamma(3/4)), (D) Gamma(1/4) / (pi^(3/4) sqrt 2),
/// with Gamma from its defining integral.
struct ThetaAssembly {
    ApproxValue series;
    ApproxValue eta;
    ApproxValue gamma_ratio;
    ApproxValue gamma_reflected;
    /// pairs A-B, A-C, A-D, B-C, B-D, C-D
    std::vector<VerificationRecord> pairs;

    /// The pair with the largest residual relative to its allowance.
    [[nodiscard]] const VerificationRecord& worst() const {
        const VerificationRecord* w = &pairs.front();
        for (const auto& p : pairs) {
            if (p.abs_error - (p.combined_bound + p.tolerance) > w->abs_error - (w->combined_bound + w->tolerance)) w = &p;
        }
        return *w;
    }
    [[nodiscard]] bool all_pass() const {
        for (const auto& p : pairs) {
            if (!p.pass) return false;
        }
        return true;
    }
};

inline ThetaAssembly theta_at_i_assembly(double tol = 1e-10) {
    if (!(tol > 0)) throw std::invalid_argument("theta_at_i_assembly: tol must be positive");
    const double engine_tol = std::min(1e-13, tol / 100);
    const UpperHalfPoint i_point(0.0, 1.0);
    const double pi = std::numbers::pi;

    ThetaAssembly out;
    const ComplexApprox theta = theta_uhp(i_point, engine_tol);
    out.series = {theta.re, theta.error_bound, theta.cost};
    out.eta = std::sqrt(2.0) * eta_uhp(i_point, engine_tol).modulus();

    const ApproxValue g14 = gamma_integral(0.25, engine_tol);
    const ApproxValue g34 = gamma_integral(0.75, engine_tol);
    out.gamma_ratio = std::pow(2 * pi, -0.25) * sqrt(g14 / g34);
    out.gamma_reflected = (1 / (std::pow(pi, 0.75) * std::sqrt(2.0))) * g14;

    const std::string anchor = "theta(i) = (2 pi)^(-1/4) sqrt(Gamma(1/4)/Gamma(3/4)) = Gamma(1/4) / (pi^(3/4) sqrt 2)";
    const std::pair<const char*, const ApproxValue*> items[] = {
        {"A", &out.series}, {"B", &out.eta}, {"C", &out.gamma_ratio}, {"D", &out.gamma_reflected}};
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = x + 1; y < 4; ++y) {
            const ApproxValue& l = *items[x].second;
            const ApproxValue& r = *items[y].second;
            out.pairs.push_back(make_record(std::string("theta(i) ") + items[x].first + " vs " + items[y].first, anchor, l.value,
                                            r.value, l.error_bound + r.error_bound, tol));
        }
    }
    return out;
}

}  // namespace thetaval
