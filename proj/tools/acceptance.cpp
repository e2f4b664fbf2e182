// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "thetaval/pipeline.hpp"
#include "thetaval/thetaval.hpp"

using namespace thetaval;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// worst |x - y| over a list, folded into an outcome
struct Worst {
    double err = 0;
    bool ok = true;
    void take(double e, double allowed) {
        err = std::max(err, e);
        ok = ok && e <= allowed;
    }
};

const std::vector<BinaryQuadraticForm> kFourForms = {{1, 0, 1}, {2, -2, 1}, {1, 0, 2}, {1, 1, 1}};

Outcome c1_triple_product() {
    const auto t0 = std::chrono::steady_clock::now();
    const bool same = theta_qseries(512) == triple_product_qseries(512);
    const double t = seconds_since(t0);
    return {same && t < 1.0, std::string(same ? "identical" : "MISMATCH") + " through q^512, " + fmt("%.3f s", t)};
}

Outcome c2_two_squares() {
    const auto t0 = std::chrono::steady_clock::now();
    const QSeries theta = theta_qseries(512);
    const QSeries sq = qs_mul(theta, theta);
    long bad = 0;
    for (std::int64_t n = 1; n <= 10000; ++n) {
        const std::int64_t d = r_divisor(n);
        if (r_bruteforce(n) != d) ++bad;
        if (n <= 512 && sq[static_cast<std::size_t>(n)] != d) ++bad;
    }
    const double t = seconds_since(t0);
    return {bad == 0 && t < 5.0, std::to_string(bad) + " mismatches for n <= 10000, " + fmt("%.3f s", t)};
}

Outcome c3_lemma_integral() {
    const auto t0 = std::chrono::steady_clock::now();
    const double lhs = std::exp(integral_I().value);
    const double rhs = gamma_integral(0.75).value / gamma_integral(0.25).value * std::sqrt(2 * std::numbers::pi);
    const double t = seconds_since(t0);
    const double e = std::abs(lhs - rhs);
    return {e <= 1e-10 && t < 1.0, fmt("|diff| %.3g", e) + ", " + fmt("%.3f s", t)};
}

Outcome c4_reflection() {
    const double e = std::abs(gamma_integral(0.25).value * gamma_integral(0.75).value - std::numbers::pi * std::numbers::sqrt2);
    return {e <= 1e-10, fmt("|diff| %.3g", e)};
}

Outcome c5_f_closed_forms() {
    Worst f1;
    Worst fp;
    for (const BinaryQuadraticForm q : {BinaryQuadraticForm(1, 0, 1), BinaryQuadraticForm(2, -2, 1), BinaryQuadraticForm(1, 0, 2)}) {
        const double sd = std::sqrt(q.discriminant());
        f1.take(std::abs(f_form(q, 1.0).value + 2 * std::numbers::pi / sd), 1e-10);
        fp.take(std::abs(f_form_derivative_at_1(q).value + (4 * std::numbers::pi / sd) * std::log(std::sqrt(q.a() / q.discriminant()))),
                1e-8);
    }
    return {f1.ok && fp.ok, fmt("f(1) worst %.3g", f1.err) + fmt(", f'(1) worst %.3g", fp.err)};
}

Outcome c6_kronecker() {
    const auto t0 = std::chrono::steady_clock::now();
    Worst w;
    for (const auto& q : kFourForms) w.take(std::abs(kronecker_lhs(q, 1e-7).value - kronecker_rhs(q).value), 1e-6);
    const double t = seconds_since(t0);
    return {w.ok && t < 30.0, fmt("worst |lhs-rhs| %.3g", w.err) + ", " + fmt("%.2f s", t)};
}

Outcome c7_l1_series() {
    Worst w;
    for (const auto& q : kFourForms) {
        const double eta_abs = eta_uhp(q.z_q()).abs();
        w.take(std::abs(l1_series(q).value + std::log(eta_abs * eta_abs)), 1e-10);
    }
    return {w.ok, fmt("worst %.3g", w.err)};
}

Outcome c8_dirichlet_series() {
    Worst w;
    const BinaryQuadraticForm unit(1, 0, 1);
    for (double s : {1.5, 2.0, 3.0, 1 + std::ldexp(1.0, -10)}) {
        w.take(std::abs(epstein_accelerated(unit, s).value - 4 * zeta(s).value * L_chi4(s).value), 1e-9);
    }
    return {w.ok, fmt("worst %.3g", w.err)};
}

Outcome c9_derivative() {
    const DerivativeRoutes d = derivative_routes();
    Worst w;
    w.take(std::abs(d.from_series.value - d.from_difference.value), 1e-6);
    w.take(std::abs(d.from_series.value - d.from_integral.value), 1e-6);
    w.take(std::abs(d.from_difference.value - d.from_integral.value), 1e-6);
    return {w.ok, fmt("worst pairwise %.3g", w.err)};
}

Outcome c10_target_limit() {
    const VerificationRecord r = target_limit_check(1e-8);
    return {r.abs_error <= 1e-8, fmt("|limit - I| %.3g", r.abs_error)};
}

Outcome c11_theta_at_i() {
    const ThetaAssembly a = theta_at_i_assembly(1e-10);
    Worst w;
    for (const auto& p : a.pairs) w.take(p.abs_error, 1e-10);

    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream sink;
    const int code = run(RunConfig{}, sink);
    const double t = seconds_since(t0);
    return {w.ok && code == 0 && t < 60.0,
            fmt("worst pair %.3g", w.err) + ", default run exit " + std::to_string(code) + " in " + fmt("%.1f s", t)};
}

Outcome c12_engines() {
    int bad = 0;
    double worst_ratio = 0;
    for (const auto& q : kFourForms) {
        for (double s : {1.25, 1.5, 2.0, 3.0}) {
            const ApproxValue d = epstein_direct(q, s, 1000);
            const ApproxValue a = epstein_accelerated(q, s);
            const double ratio = std::abs(d.value - a.value) / (d.error_bound + a.error_bound);
            worst_ratio = std::max(worst_ratio, ratio);
            if (!(ratio <= 1)) ++bad;
        }
    }
    return {bad == 0, std::to_string(bad) + " of 16 outside bounds, worst |diff|/bound " + fmt("%.3g", worst_ratio)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"triple product coefficients", c1_triple_product},
        {"two squares three ways", c2_two_squares},
        {"exp(I) against the Gamma ratio", c3_lemma_integral},
        {"Gamma(1/4) Gamma(3/4) = pi sqrt 2", c4_reflection},
        {"f(1) and f'(1) closed forms", c5_f_closed_forms},
        {"Kronecker limit formula", c6_kronecker},
        {"L1 series against eta", c7_l1_series},
        {"zeta(s, x^2+y^2) = 4 zeta(s) L(s)", c8_dirichlet_series},
        {"derivative of Gamma(s) L(s) at 1", c9_derivative},
        {"target limit against I", c10_target_limit},
        {"theta(i) four ways", c11_theta_at_i},
        {"direct vs accelerated Epstein", c12_engines},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s  %2zu  %-36s %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
