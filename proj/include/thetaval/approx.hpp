#pragma once

// Numeric results with an attached absolute error bound and an evaluation
// cost counter, plus the exceptions and summation helpers shared by every
// floating-point engine in the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace thetaval {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Thrown when an iterative engine hits its level/term limit before reaching
/// the requested tolerance. Carries the best value found and its bound.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double best, double bound)
        : std::runtime_error(what), best_value(best), achieved_bound(bound) {}

    double best_value;
    double achieved_bound;
};

struct ApproxValue {
    double value = 0.0;
    double error_bound = 0.0;
    std::int64_t cost = 0;

    [[nodiscard]] bool contains(double x) const { return std::abs(value - x) <= error_bound; }
};

/// A tolerance is absolute for |value| <= 1 and relative above; the
/// rounding floor of large values would otherwise make tight absolute
/// tolerances unreachable.
inline bool meets(const ApproxValue& x, double tol) { return x.error_bound <= tol * std::max(1.0, std::abs(x.value)); }

inline ApproxValue exact(double v) { return {v, 0.0, 0}; }

inline ApproxValue operator+(const ApproxValue& x, const ApproxValue& y) {
    const double v = x.value + y.value;
    return {v, x.error_bound + y.error_bound + kEps * std::abs(v), x.cost + y.cost};
}

inline ApproxValue operator-(const ApproxValue& x) { return {-x.value, x.error_bound, x.cost}; }

inline ApproxValue operator-(const ApproxValue& x, const ApproxValue& y) { return x + (-y); }

inline ApproxValue operator*(const ApproxValue& x, const ApproxValue& y) {
    const double v = x.value * y.value;
    const double e = std::abs(x.value) * y.error_bound + std::abs(y.value) * x.error_bound +
                     x.error_bound * y.error_bound + kEps * std::abs(v);
    return {v, e, x.cost + y.cost};
}

inline ApproxValue operator*(double k, const ApproxValue& x) {
    const double v = k * x.value;
    return {v, std::abs(k) * x.error_bound + kEps * std::abs(v), x.cost};
}

inline ApproxValue operator/(const ApproxValue& x, const ApproxValue& y) {
    if (y.error_bound >= std::abs(y.value)) {
        return {x.value / y.value, std::numeric_limits<double>::infinity(), x.cost + y.cost};
    }
    const double v = x.value / y.value;
    const double lo = std::abs(y.value) - y.error_bound;
    const double e = (x.error_bound + std::abs(v) * y.error_bound) / lo + kEps * std::abs(v);
    return {v, e, x.cost + y.cost};
}

/// log of a positive quantity; the bound uses the worst-case slope 1/(x - dx).
inline ApproxValue log(const ApproxValue& x) {
    const double v = std::log(x.value);
    const double lo = x.value - x.error_bound;
    const double e = lo > 0 ? -std::log1p(-x.error_bound / x.value) + kEps * std::abs(v)
                            : std::numeric_limits<double>::infinity();
    return {v, e, x.cost};
}

inline ApproxValue exp(const ApproxValue& x) {
    const double v = std::exp(x.value);
    return {v, v * std::expm1(x.error_bound) + kEps * v, x.cost};
}

inline ApproxValue sqrt(const ApproxValue& x) {
    const double v = std::sqrt(x.value);
    const double lo = x.value - x.error_bound;
    const double e = lo >= 0 ? v - std::sqrt(lo) + kEps * v : v;
    return {v, std::max(e, std::sqrt(x.value + x.error_bound) - v), x.cost};
}

inline ApproxValue pow(const ApproxValue& x, double p) { return exp(p * log(x)); }

/// Neumaier's variant of Kahan summation. Order-dependent but deterministic.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_ += std::abs(x);
        ++count_;
    }
    CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }

    [[nodiscard]] double value() const { return sum_ + comp_; }
    /// Sum of magnitudes of the addends; scales the rounding estimate.
    [[nodiscard]] double magnitude() const { return abs_; }
    [[nodiscard]] std::int64_t count() const { return count_; }
    /// Conservative rounding estimate for the compensated result.
    [[nodiscard]] double rounding_bound() const { return 2 * kEps * std::abs(value()) + 4 * kEps * kEps * count_ * abs_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
    std::int64_t count_ = 0;
};

}  // namespace thetaval
