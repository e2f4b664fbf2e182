#pragma once

// Character mod 4 and two-squares counting.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace thetaval {

/// Value of the nontrivial Dirichlet character mod 4: -1, 0 or +1.
class Chi4Value {
public:
    constexpr explicit Chi4Value(int v) : value_(v) {
        if (v < -1 || v > 1) throw std::invalid_argument("Chi4Value out of range");
    }
    [[nodiscard]] constexpr int value() const { return value_; }
    constexpr operator int() const { return value_; }  // NOLINT(google-explicit-constructor)
    friend constexpr bool operator==(Chi4Value, Chi4Value) = default;

private:
    int value_;
};

constexpr Chi4Value chi4(std::int64_t n) {
    const std::int64_t r = ((n % 4) + 4) % 4;
    if (r == 1) return Chi4Value(1);
    if (r == 3) return Chi4Value(-1);
    return Chi4Value(0);
}

inline std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Ordered pairs (x, y) in Z^2 with x^2 + y^2 = n, by exhaustive search.
inline std::int64_t r_bruteforce(std::int64_t n) {
    if (n <= 0) throw std::domain_error("r_bruteforce: n must be positive");
    std::int64_t bound = isqrt(n);
    if (bound * bound < n) ++bound;
    std::int64_t count = 0;
    for (std::int64_t x = -bound; x <= bound; ++x) {
        for (std::int64_t y = -bound; y <= bound; ++y) {
            if (x * x + y * y == n) ++count;
        }
    }
    return count;
}

/// 4 * sum_{d | n} chi4(d). Divisors found by trial division up to sqrt(n).
inline std::int64_t r_divisor(std::int64_t n) {
    if (n <= 0) throw std::domain_error("r_divisor: n must be positive");
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += chi4(d);
        if (d * d != n) sum += chi4(n / d);
    }
    return 4 * sum;
}

}  // namespace thetaval
