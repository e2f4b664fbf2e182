#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace thetaval {

/// Point z with Im z > 0; the constructor enforces the half-plane condition.
class UpperHalfPoint {
public:
    UpperHalfPoint(double re, double im) : re_(re), im_(im) {
        if (!std::isfinite(re) || !std::isfinite(im)) throw std::invalid_argument("UpperHalfPoint: non-finite coordinate");
        if (!(im > 0)) throw std::invalid_argument("UpperHalfPoint: imaginary part must be positive");
    }
    explicit UpperHalfPoint(std::complex<double> z) : UpperHalfPoint(z.real(), z.imag()) {}

    [[nodiscard]] double re() const { return re_; }
    [[nodiscard]] double im() const { return im_; }
    [[nodiscard]] std::complex<double> value() const { return {re_, im_}; }

    /// z + k for real k.
    [[nodiscard]] UpperHalfPoint shifted(double k) const { return {re_ + k, im_}; }

    /// z / 2 + 1 / 2, built from the coordinates directly.
    [[nodiscard]] UpperHalfPoint half_plus_half() const { return {0.5 * re_ + 0.5, 0.5 * im_}; }

    friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;

private:
    double re_;
    double im_;
};

}  // namespace thetaval
