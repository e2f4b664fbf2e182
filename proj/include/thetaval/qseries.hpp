#pragma once

// Truncated power series in q with unbounded integer coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thetaval {

using BigInt = boost::multiprecision::cpp_int;

/// Power series c_0 + c_1 q + ... + c_order q^order, everything above q^order
/// discarded. Coefficient storage always holds exactly order + 1 entries.
class QSeries {
public:
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}

    QSeries(std::size_t order, std::initializer_list<long long> leading) : coeffs_(order + 1) {
        std::size_t i = 0;
        for (long long c : leading) {
            if (i > order) break;
            coeffs_[i++] = c;
        }
    }

    static QSeries one(std::size_t order) {
        QSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }

    [[nodiscard]] const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
    BigInt& operator[](std::size_t n) { return coeffs_.at(n); }

    /// Same series cut down to a smaller order.
    [[nodiscard]] QSeries truncated(std::size_t order) const {
        QSeries s(std::min(order, this->order()));
        std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
        return s;
    }

    /// Multiplies in place by (1 + sign * q^k); k >= 1. Cost O(order).
    void mul_binomial(std::size_t k, int sign) {
        if (k == 0) throw std::invalid_argument("mul_binomial: k must be positive");
        if (k > order()) return;
        for (std::size_t n = order(); n >= k; --n) {
            if (sign > 0) {
                coeffs_[n] += coeffs_[n - k];
            } else {
                coeffs_[n] -= coeffs_[n - k];
            }
        }
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Cauchy product truncated to the smaller of the two orders.
inline QSeries qs_mul(const QSeries& a, const QSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    QSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline QSeries qs_add(const QSeries& a, const QSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    QSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) out[i] = a[i] + b[i];
    return out;
}

/// sum over n in Z of q^(n^2), truncated at q^order.
inline QSeries theta_qseries(std::size_t order) {
    QSeries s(order);
    s[0] = 1;
    for (std::size_t n = 1; n * n <= order; ++n) s[n * n] = 2;
    return s;
}

/// prod_{n>=1} (1 - q^(2n)) (1 + q^(2n-1))^2, expanded exactly up to q^order.
/// Factors whose lowest nonconstant power exceeds the order are 1 modulo
/// q^(order+1) and are skipped.
inline QSeries triple_product_qseries(std::size_t order) {
    QSeries s = QSeries::one(order);
    for (std::size_t n = 1; 2 * n - 1 <= order; ++n) {
        s.mul_binomial(2 * n - 1, +1);
        s.mul_binomial(2 * n - 1, +1);
        if (2 * n <= order) s.mul_binomial(2 * n, -1);
    }
    return s;
}

/// Coefficient of q^n in theta_qseries(order)^2, i.e. the number of ordered
/// pairs (x, y) with x^2 + y^2 = n.
inline BigInt r_from_theta_squared(std::size_t n, std::size_t order) {
    if (n > order) throw std::out_of_range("r_from_theta_squared: n exceeds series order");
    const QSeries t = theta_qseries(order);
    return qs_mul(t, t)[n];
}

}  // namespace thetaval
