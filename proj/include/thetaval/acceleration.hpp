#pragma once

// Series acceleration and limit extrapolation:
//  - alternating sums  sum_{k>=0} (-1)^k a_k  by the Cohen / Rodriguez
//    Villegas / Zagier weights (error ~ 5.83^-n for n terms);
//  - polynomial (Richardson) extrapolation of g(eps_k) to eps = 0 via
//    Neville's table.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetaval/approx.hpp"

namespace thetaval {

/// CRVZ "algorithm 1" with n terms: returns sum_{k=0}^{n-1} w_k (-1)^k a_k,
/// weights normalized so constant sequences sum exactly.
template <class Term>
double alternating_sum_fixed(Term&& a, int n, double* magnitude = nullptr) {
    double d = std::pow(3 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1 / d);
    double b = -1.0;
    double c = -d;
    CompensatedSum s;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s.add(c * a(k));
        b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b / ((k + 0.5) * (k + 1.0));
    }
    if (magnitude != nullptr) *magnitude = s.magnitude() / d;
    return s.value() / d;
}

/// sum_{k>=0} (-1)^k a(k) to absolute tolerance tol. The number of terms
/// grows in steps of 4 until successive results agree; the reported bound
/// is that difference (which overestimates the error of the later value by
/// roughly 5.83^4) plus a rounding term.
template <class Term>
ApproxValue alternating_sum(Term&& a, double tol, int max_terms = 1000) {
    if (!(tol > 0)) throw std::invalid_argument("alternating_sum: tol must be positive");
    constexpr int kStep = 4;
    double mag = 0.0;
    double prev = alternating_sum_fixed(a, 8, &mag);
    std::int64_t cost = 8;
    double bound = std::numeric_limits<double>::infinity();
    for (int n = 8 + kStep; n <= max_terms; n += kStep) {
        const double cur = alternating_sum_fixed(a, n, &mag);
        cost += n;
        bound = std::abs(cur - prev) + 4 * kEps * (mag + n * std::abs(cur));
        if (bound <= tol) return {cur, bound, cost};
        prev = cur;
    }
    throw NonConvergence("alternating_sum: term limit reached", prev, bound);
}

/// Neville table for extrapolating g(eps) to eps = 0 from samples at
/// strictly decreasing positive abscissae.
struct ExtrapolationTable {
    std::vector<double> abscissae;
    std::vector<double> values;
    /// rows[i][j]: value at 0 of the degree-j interpolant through points i-j..i
    std::vector<std::vector<double>> rows;
    double extrapolated = 0.0;
    double error_bound = 0.0;
    /// sum of |Lagrange weights at 0|; amplification of sample noise
    double lebesgue = 0.0;
};

/// Builds the table. value_errors (optional, same length as values) are the
/// absolute errors of the samples; they enter error_bound amplified by the
/// Lebesgue constant of the full interpolant.
inline ExtrapolationTable richardson_to_zero(std::vector<double> abscissae, std::vector<double> values,
                                             const std::vector<double>& value_errors = {}) {
    const std::size_t n = abscissae.size();
    if (n < 4) throw std::invalid_argument("richardson_to_zero: need at least 4 samples");
    if (values.size() != n) throw std::invalid_argument("richardson_to_zero: size mismatch");
    if (!value_errors.empty() && value_errors.size() != n) throw std::invalid_argument("richardson_to_zero: error size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(abscissae[i] > 0)) throw std::invalid_argument("richardson_to_zero: abscissae must be positive");
        if (i > 0 && !(abscissae[i] < abscissae[i - 1])) {
            throw std::invalid_argument("richardson_to_zero: abscissae must be strictly decreasing");
        }
    }

    ExtrapolationTable t;
    t.rows.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        t.rows[i].resize(i + 1);
        t.rows[i][0] = values[i];
        for (std::size_t j = 1; j <= i; ++j) {
            const double x_far = abscissae[i - j];
            const double x_near = abscissae[i];
            t.rows[i][j] = (x_far * t.rows[i][j - 1] - x_near * t.rows[i - 1][j - 1]) / (x_far - x_near);
        }
    }

    double lebesgue = 0.0;
    double noise = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double w = 1.0;
        for (std::size_t m = 0; m < n; ++m) {
            if (m != k) w *= abscissae[m] / (abscissae[m] - abscissae[k]);
        }
        lebesgue += std::abs(w);
        const double ek = value_errors.empty() ? 0.0 : value_errors[k];
        noise += std::abs(w) * (ek + kEps * std::abs(values[k]));
    }

    const double last = t.rows[n - 1][n - 1];
    const double along_row = std::abs(last - t.rows[n - 1][n - 2]);
    const double along_diag = std::abs(last - t.rows[n - 2][n - 2]);
    t.extrapolated = last;
    t.error_bound = std::max(along_row, along_diag) + noise;
    t.lebesgue = lebesgue;
    t.abscissae = std::move(abscissae);
    t.values = std::move(values);
    return t;
}

/// eps_k = eps0 * 2^-k, k = 0..count-1.
inline std::vector<double> geometric_nodes(double eps0, int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    double e = eps0;
    for (int k = 0; k < count; ++k, e *= 0.5) out.push_back(e);
    return out;
}

}  // namespace thetaval
