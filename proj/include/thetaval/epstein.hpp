#pragma once

// Epstein zeta zeta(s, Q) = sum_{n in Z^2 \ 0} Q(n)^-s for s > 1.
//
// Two engines share nothing but the form type:
//  * epstein_direct sums the definition inside an ellipse and adds the area
//    integral of the remainder; the bound comes from the lattice-point
//    discrepancy of an ellipse (unit squares centred on lattice points lie
//    within a strip of half-width sqrt(2)/2 of the boundary).
//  * epstein_accelerated splits Gamma(s) Q^-s = int t^(s-1) e^(-tQ) dt at
//    t = lambda; large t gives incomplete gammas, small t is Poisson-summed
//    onto the dual lattice. Both sums decay like e^(-const * Q) and are cut
//    with explicit tail bounds.
//
// Lattice points are visited ring by ring (max-norm r = 1, 2, ...) over the
// half plane {y > 0} u {y = 0, x > 0}, in a fixed order, and the result is
// doubled. Summation is compensated.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "thetaval/approx.hpp"
#include "thetaval/form.hpp"

namespace thetaval {

namespace detail {

/// Calls f(m, n) for the 4r half-plane points of the ring max(|m|,|n|) = r.
template <class F>
void for_each_half_ring(std::int64_t r, F&& f) {
    for (std::int64_t m = -r; m <= r; ++m) f(m, r);
    for (std::int64_t n = r - 1; n >= 1; --n) {
        f(r, n);
        f(-r, n);
    }
    f(r, 0);
}

/// Largest max-norm of a lattice point with Q <= level.
inline std::int64_t ring_radius_for_level(const BinaryQuadraticForm& q, double level) {
    const double d = q.discriminant();
    const double extent = std::sqrt(4 * std::max(q.a(), q.c()) * level / d);
    return static_cast<std::int64_t>(std::floor(extent)) + 1;
}

/// Upper bound for #{n : Q(n) <= u} of the form
/// area * u + boundary * sqrt(u) + corner.
struct LatticeCount {
    double area;
    double boundary;
    double corner;
};

inline LatticeCount lattice_count_bound(const BinaryQuadraticForm& q) {
    return {2 * std::numbers::pi / std::sqrt(q.discriminant()),
            std::numbers::pi * std::sqrt(2 / q.min_eigenvalue()),
            std::numbers::pi / 2};
}

/// Bound on sum_{Q(n) > level} C e^(-rate Q(n)), from integrating the
/// counting bound against the exponential.
inline double exponential_tail_bound(const BinaryQuadraticForm& q, double rate, double level, double scale) {
    const LatticeCount lc = lattice_count_bound(q);
    const double root = std::sqrt(level);
    return scale * std::exp(-rate * level) *
           (lc.area * (level + 1 / rate) + lc.boundary * (root + 1 / (2 * rate * root)) + lc.corner);
}

}  // namespace detail

/// Gamma(s, x) = int_x^inf t^(s-1) e^-t dt for real s and x > 0 by the
/// Legendre continued fraction (modified Lentz), valid for any real s.
inline ApproxValue upper_incomplete_gamma_cf(double s, double x) {
    if (!(x > 0)) throw std::domain_error("upper_incomplete_gamma_cf: x must be positive");
    constexpr double kTiny = 1e-300;
    constexpr int kMaxIter = 100000;
    double b = x + 1 - s;
    double c = 1 / kTiny;
    double d = 1 / b;
    double h = d;
    int i = 1;
    double delta = 0.0;
    for (; i <= kMaxIter; ++i) {
        const double an = -i * (i - s);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1 / d;
        delta = d * c;
        h *= delta;
        if (std::abs(delta - 1) <= kEps) break;
    }
    const double prefactor = std::exp(s * std::log(x) - x);
    const double v = prefactor * h;
    if (i > kMaxIter) throw NonConvergence("upper_incomplete_gamma: continued fraction did not converge", v, std::abs(v));
    return {v, std::abs(v) * (std::abs(delta - 1) + 4 * kEps * std::sqrt(static_cast<double>(i) + 16)), i};
}

/// Gamma(s, x) for s > 0, x > 0: continued fraction for x >= s + 1,
/// Gamma(s) minus the lower series otherwise.
inline ApproxValue upper_incomplete_gamma(double s, double x) {
    if (!(s > 0)) throw std::domain_error("upper_incomplete_gamma: s must be positive");
    if (!(x > 0)) throw std::domain_error("upper_incomplete_gamma: x must be positive");
    if (x >= s + 1) return upper_incomplete_gamma_cf(s, x);

    // gamma(s, x) = x^s e^-x sum_k x^k / (s (s+1) ... (s+k))
    CompensatedSum series;
    double term = 1 / s;
    int k = 0;
    constexpr int kMaxTerms = 10000;
    for (; k < kMaxTerms; ++k) {
        series.add(term);
        term *= x / (s + k + 1);
        if (term < kEps * series.value() * 1e-2) break;
    }
    if (k == kMaxTerms) throw NonConvergence("upper_incomplete_gamma: series did not converge", 0, 1);
    const double lower = std::exp(s * std::log(x) - x) * series.value();
    const double full = std::tgamma(s);
    const double v = full - lower;
    return {v, 8 * kEps * (full + lower), k};
}

/// Q(m, n)^-s summed over 0 < Q <= T, where {Q <= T} is the largest level
/// ellipse inscribed in the square max(|m|,|n|) <= radius, plus the area
/// integral (2 pi / sqrt D) T^(1-s) / (s-1) of the rest.
inline ApproxValue epstein_direct(const BinaryQuadraticForm& q, double s, std::int64_t radius) {
    if (!(s > 1)) throw std::domain_error("epstein_direct: s must exceed 1");
    if (radius < 8) throw std::invalid_argument("epstein_direct: radius must be at least 8");
    const double d = q.discriminant();
    const auto rd = static_cast<double>(radius);
    const double level = rd * rd * d / (4 * std::max(q.a(), q.c()));

    CompensatedSum half;
    for (std::int64_t r = 1; r <= radius; ++r) {
        detail::for_each_half_ring(r, [&](std::int64_t m, std::int64_t n) {
            const double v = evaluate(q, {m, n});
            if (v <= level) half.add(std::pow(v, -s));
        });
    }
    const double area = 2 * std::numbers::pi / std::sqrt(d);
    const double tail = area * std::pow(level, 1 - s) / (s - 1);
    const double value = 2 * half.value() + tail;

    const detail::LatticeCount lc = detail::lattice_count_bound(q);
    const double discrepancy = lc.boundary * std::pow(level, 0.5 - s) * (1 + s / (s - 0.5)) + 2 * lc.corner * std::pow(level, -s);
    const double rounding = 2 * half.rounding_bound() + 4 * kEps * (std::abs(value) + tail) +
                            2 * kEps * half.magnitude() * (1 + s * std::log(level));
    return {value, discrepancy + rounding, 2 * half.count()};
}

/// Parts of Gamma(s) zeta(s, Q) in the accelerated splitting.
struct EpsteinParts {
    ApproxValue primal;      // sum_{n != 0} Q(n)^-s Gamma(s, lambda Q(n))
    ApproxValue elementary;  // (2 pi / sqrt D) lambda^(s-1) / (s-1) - lambda^s / s
    ApproxValue dual;        // (2 pi / sqrt D) sum_{k != 0} (pi^2 Q*(k))^(s-1) Gamma(1-s, pi^2 Q*(k) / lambda)
    double gamma_s = 1.0;    // Gamma(s)
    double lambda = 1.0;
};

/// The n = 0 / k = 0 terms of the Poisson-transformed small-t integral:
/// int_0^lambda t^(s-1) ((2 pi / (t sqrt D)) - 1) dt.
inline ApproxValue epstein_elementary_terms(const BinaryQuadraticForm& q, double s, double lambda) {
    const double area = 2 * std::numbers::pi / std::sqrt(q.discriminant());
    const double first = area * std::pow(lambda, s - 1) / (s - 1);
    const double second = std::pow(lambda, s) / s;
    const double v = first - second;
    return {v, 4 * kEps * (std::abs(first) + std::abs(second)), 2};
}

/// Splitting with parameter lambda; each lattice sum is cut so its tail
/// bound is below part_tol.
inline EpsteinParts epstein_parts(const BinaryQuadraticForm& q, double s, double part_tol, double lambda) {
    if (!(s > 1)) throw std::domain_error("epstein_parts: s must exceed 1");
    if (!(lambda > 0)) throw std::invalid_argument("epstein_parts: lambda must be positive");
    EpsteinParts p;
    p.lambda = lambda;
    p.gamma_s = std::tgamma(s);
    p.elementary = epstein_elementary_terms(q, s, lambda);

    // primal: Q^-s Gamma(s, lambda Q) <= lambda^s e^(-lambda Q) / (lambda X - s + 1) for Q >= X >= s / lambda
    {
        double level = (s + 1) / lambda;
        auto bound_at = [&](double x) {
            return detail::exponential_tail_bound(q, lambda, x, std::pow(lambda, s) / (lambda * x - s + 1));
        };
        while (bound_at(level) > part_tol) level *= 1.05;
        const std::int64_t radius = detail::ring_radius_for_level(q, level);
        CompensatedSum half;
        double errors = 0.0;
        std::int64_t cost = 0;
        for (std::int64_t r = 1; r <= radius; ++r) {
            detail::for_each_half_ring(r, [&](std::int64_t m, std::int64_t n) {
                const double v = evaluate(q, {m, n});
                if (v > level) return;
                const ApproxValue g = upper_incomplete_gamma(s, lambda * v);
                const double w = std::pow(v, -s);
                half.add(w * g.value);
                errors += w * g.error_bound;
                cost += g.cost;
            });
        }
        const double value = 2 * half.value();
        p.primal = {value, bound_at(level) + 2 * errors + 2 * half.rounding_bound() + 4 * kEps * std::abs(value), cost};
    }

    // dual: Gamma(1-s, y) <= y^-s e^-y, so each term is at most
    // (2 pi / sqrt D) lambda^(s-1) e^(-y) / y with y = (pi^2 / lambda) Q*(k)
    {
        const BinaryQuadraticForm dual = q.dual();
        const double area = 2 * std::numbers::pi / std::sqrt(q.discriminant());
        const double rate = std::numbers::pi * std::numbers::pi / lambda;
        double level = 1 / rate;
        auto bound_at = [&](double x) {
            return detail::exponential_tail_bound(dual, rate, x, area * std::pow(lambda, s - 1) / (rate * x));
        };
        while (bound_at(level) > part_tol) level *= 1.05;
        const std::int64_t radius = detail::ring_radius_for_level(dual, level);
        CompensatedSum half;
        double errors = 0.0;
        std::int64_t cost = 0;
        for (std::int64_t r = 1; r <= radius; ++r) {
            detail::for_each_half_ring(r, [&](std::int64_t m, std::int64_t n) {
                const double v = evaluate(dual, {m, n});
                if (v > level) return;
                const ApproxValue g = upper_incomplete_gamma_cf(1 - s, rate * v);
                const double w = std::pow(std::numbers::pi * std::numbers::pi * v, s - 1);
                half.add(w * g.value);
                errors += w * g.error_bound;
                cost += g.cost;
            });
        }
        const double value = 2 * area * half.value();
        p.dual = {value, bound_at(level) + 2 * area * errors + 2 * area * half.rounding_bound() + 4 * kEps * std::abs(value), cost};
    }
    return p;
}

/// Accelerated Epstein zeta with lambda = 2 pi / sqrt(D). tol follows the
/// library convention (absolute below 1, relative above).
inline ApproxValue epstein_accelerated(const BinaryQuadraticForm& q, double s, double tol = 1e-12) {
    if (!(s > 1)) throw std::domain_error("epstein_accelerated: s must exceed 1");
    if (!(tol > 0)) throw std::invalid_argument("epstein_accelerated: tol must be positive");
    const double lambda = 2 * std::numbers::pi / std::sqrt(q.discriminant());
    const EpsteinParts p = epstein_parts(q, s, tol / 8, lambda);
    const ApproxValue total = p.primal + p.elementary + p.dual;
    const double v = total.value / p.gamma_s;
    const ApproxValue out{v, total.error_bound / p.gamma_s + 4 * kEps * std::abs(v), total.cost};
    if (!meets(out, tol)) throw NonConvergence("epstein_accelerated: bound above tolerance", out.value, out.error_bound);
    return out;
}

}  // namespace thetaval
