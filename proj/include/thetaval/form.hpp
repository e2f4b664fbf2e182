#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "thetaval/format.hpp"
#include "thetaval/upper_half_plane.hpp"

namespace thetaval {

/// Positive-definite real binary quadratic form a x^2 + b x y + c y^2.
/// Construction rejects a <= 0 or D = 4ac - b^2 <= 0.
class BinaryQuadraticForm {
public:
    BinaryQuadraticForm(double a, double b, double c) : a_(a), b_(b), c_(c) {
        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
            throw std::invalid_argument("BinaryQuadraticForm: non-finite coefficient");
        }
        if (!(a > 0)) throw std::invalid_argument("BinaryQuadraticForm: a must be positive");
        if (!(discriminant() > 0)) throw std::invalid_argument("BinaryQuadraticForm: 4ac - b^2 must be positive");
    }

    [[nodiscard]] double a() const { return a_; }
    [[nodiscard]] double b() const { return b_; }
    [[nodiscard]] double c() const { return c_; }

    /// D = 4ac - b^2 (positive for every constructed form).
    [[nodiscard]] double discriminant() const { return 4 * a_ * c_ - b_ * b_; }

    [[nodiscard]] double operator()(double x, double y) const { return a_ * x * x + b_ * x * y + c_ * y * y; }

    /// Smaller eigenvalue of the Gram matrix [[a, b/2], [b/2, c]].
    [[nodiscard]] double min_eigenvalue() const {
        const double mean = 0.5 * (a_ + c_);
        const double dev = std::hypot(0.5 * (a_ - c_), 0.5 * b_);
        // product of eigenvalues is D/4; divide to avoid cancellation
        return (discriminant() / 4) / (mean + dev);
    }

    /// Root of Q(z, 1) = 0 in the upper half-plane, (-b + i sqrt(D)) / (2a).
    [[nodiscard]] std::complex<double> root() const {
        return {-b_ / (2 * a_), std::sqrt(discriminant()) / (2 * a_)};
    }
    [[nodiscard]] UpperHalfPoint z_q() const { return UpperHalfPoint(root()); }

    /// Form of the inverse Gram matrix, x^T A^{-1} x; the dual lattice's norm.
    [[nodiscard]] BinaryQuadraticForm dual() const {
        const double d = discriminant();
        return {4 * c_ / d, -4 * b_ / d, 4 * a_ / d};
    }

    [[nodiscard]] BinaryQuadraticForm scaled(double mu) const { return {mu * a_, mu * b_, mu * c_}; }

    /// "a,b,c" with shortest round-trip formatting of each coefficient.
    [[nodiscard]] std::string to_string() const {
        return format_shortest(a_) + "," + format_shortest(b_) + "," + format_shortest(c_);
    }

    friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;

private:
    double a_;
    double b_;
    double c_;
};

struct LatticeVector {
    std::int64_t x;
    std::int64_t y;
};

inline double evaluate(const BinaryQuadraticForm& q, LatticeVector v) {
    const auto x = static_cast<double>(v.x);
    const auto y = static_cast<double>(v.y);
    return q.a() * x * x + q.b() * x * y + q.c() * y * y;
}

}  // namespace thetaval
