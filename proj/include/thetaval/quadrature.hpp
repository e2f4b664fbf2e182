#pragma once

// Double-exponential quadrature on finite intervals (tanh-sinh) and on
// half-lines (exp-sinh). Each level halves the step in the transformed
// variable and reuses the previous nodes; the error estimate is the
// difference between the last two levels plus rounding and truncation terms.
//
// The transformations cluster nodes double-exponentially at the endpoints, so
// integrable log and algebraic endpoint singularities need no special case.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "thetaval/approx.hpp"

namespace thetaval {

enum class EndpointHint { smooth, log_singular, algebraic_singular };

struct FiniteInterval {
    double lo;
    double hi;
};

/// [lo, infinity)
struct HalfLine {
    double lo = 0.0;
};

using Domain = std::variant<FiniteInterval, HalfLine>;

struct IntegralSpec {
    std::function<double(double)> integrand;
    Domain domain;
    EndpointHint left = EndpointHint::smooth;
    EndpointHint right = EndpointHint::smooth;
    double target_tol = 1e-12;
};

namespace detail {

inline constexpr double kHalfPi = std::numbers::pi / 2;

/// Node position and Jacobian of the map at a transformed abscissa u.
struct Node {
    double x;
    double weight;
    bool representable;
};

class DoubleExponentialMap {
public:
    explicit DoubleExponentialMap(const Domain& d) : domain_(d) {}

    [[nodiscard]] Node at(double u) const {
        if (const auto* fi = std::get_if<FiniteInterval>(&domain_)) {
            const double half = 0.5 * (fi->hi - fi->lo);
            const double v = kHalfPi * std::sinh(std::abs(u));
            const double ch = std::cosh(v);
            // distance to the endpoint, computed without cancellation
            const double dist = half * std::exp(-v) / ch;
            const double w = half * kHalfPi * std::cosh(u) / (ch * ch);
            const double x = u >= 0 ? fi->hi - dist : fi->lo + dist;
            const bool ok = std::isfinite(w) && dist > 0 && x > fi->lo && x < fi->hi;
            return {x, w, ok};
        }
        const auto& hl = std::get<HalfLine>(domain_);
        const double e = std::exp(kHalfPi * std::sinh(u));
        const double x = hl.lo + e;
        const double w = kHalfPi * std::cosh(u) * e;
        const bool ok = std::isfinite(w) && std::isfinite(x) && x > hl.lo && e < 1e300;
        return {x, w, ok};
    }

private:
    Domain domain_;
};

}  // namespace detail

/// Adaptive double-exponential quadrature. Throws NonConvergence when the
/// level limit is reached above target_tol, and std::invalid_argument on a
/// malformed spec.
inline ApproxValue integrate(const IntegralSpec& spec) {
    if (!(spec.target_tol > 0)) throw std::invalid_argument("integrate: target_tol must be positive");
    if (!spec.integrand) throw std::invalid_argument("integrate: empty integrand");
    if (const auto* fi = std::get_if<FiniteInterval>(&spec.domain)) {
        if (!(fi->lo < fi->hi)) throw std::invalid_argument("integrate: empty interval");
        if (!std::isfinite(fi->lo) || !std::isfinite(fi->hi)) throw std::invalid_argument("integrate: non-finite endpoint");
    }

    const detail::DoubleExponentialMap map(spec.domain);
    std::int64_t cost = 0;

    auto term = [&](double u, bool& ok) {
        const detail::Node n = map.at(u);
        ok = n.representable;
        if (!ok) return 0.0;
        const double fx = spec.integrand(n.x);
        ++cost;
        if (!std::isfinite(fx)) {
            ok = false;
            return 0.0;
        }
        return fx * n.weight;
    };

    // Truncation of the transformed line. Walk outward from u = 0 until the
    // terms are negligible against the largest seen or stop being
    // representable. Singular-hinted sides are allowed further out.
    constexpr double kScanStep = 1.0 / 16;
    constexpr double kNegligible = 1e-20;
    double peak = 0.0;
    {
        bool ok = true;
        peak = std::abs(term(0.0, ok));
    }
    auto scan = [&](int dir, EndpointHint hint) {
        const double cap = hint == EndpointHint::smooth ? 6.0 : 7.0;
        double u = 0.0;
        double last = 0.0;
        int quiet = 0;
        while (u < cap) {
            bool ok = true;
            const double t = std::abs(term(dir * (u + kScanStep), ok));
            if (!ok) break;
            u += kScanStep;
            last = t;
            peak = std::max(peak, t);
            quiet = t <= kNegligible * peak ? quiet + 1 : 0;
            if (quiet >= 8) break;
        }
        return std::pair{u, last};
    };
    const bool half_line = std::holds_alternative<HalfLine>(spec.domain);
    const auto [u_left, edge_left] = scan(-1, spec.left);
    const auto [u_right, edge_right] = scan(+1, half_line ? EndpointHint::smooth : spec.right);
    const double truncation = (edge_left + edge_right) * kScanStep;

    auto sum_nodes = [&](double h, bool odd_only) {
        CompensatedSum s;
        double mag = 0.0;
        const auto j_lo = static_cast<long>(std::ceil(-u_left / h - 1e-9));
        const auto j_hi = static_cast<long>(std::floor(u_right / h + 1e-9));
        for (long j = j_lo; j <= j_hi; ++j) {
            if (odd_only && j % 2 == 0) continue;
            bool ok = true;
            const double t = term(static_cast<double>(j) * h, ok);
            if (!ok) continue;
            s.add(t);
        }
        mag = s.magnitude();
        return std::pair{s.value(), mag};
    };

    constexpr int kMinLevel = 3;
    constexpr int kMaxLevel = 12;
    double h = 0.5;
    auto [raw, mag] = sum_nodes(h, false);
    double estimate = h * raw;
    double magnitude = h * mag;
    double bound = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        const auto [odd, odd_mag] = sum_nodes(h, true);
        const double next = 0.5 * estimate + h * odd;
        magnitude = 0.5 * magnitude + h * odd_mag;
        const double rounding = 8 * kEps * magnitude + 4 * kEps * std::abs(next);
        bound = std::abs(next - estimate) + rounding + truncation;
        estimate = next;
        if (level >= kMinLevel && bound <= spec.target_tol) return {estimate, bound, cost};
    }
    throw NonConvergence("integrate: level limit reached with bound " + std::to_string(bound), estimate, bound);
}

}  // namespace thetaval
