#pragma once

// The verification pipeline behind the `verify` command: suite registry,
// run configuration, record aggregation and the exit-code contract
//   0 every record passes, 1 some record fails, 2 configuration or IO error,
//   3 an engine gave up (NonConvergence).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "thetaval/approx.hpp"
#include "thetaval/epstein.hpp"
#include "thetaval/form.hpp"
#include "thetaval/format.hpp"
#include "thetaval/integrals.hpp"
#include "thetaval/kronecker.hpp"
#include "thetaval/modular.hpp"
#include "thetaval/number_theory.hpp"
#include "thetaval/qseries.hpp"
#include "thetaval/report.hpp"
#include "thetaval/special_values.hpp"
#include "thetaval/verification.hpp"

namespace thetaval {

enum ExitCode : int { kExitOk = 0, kExitFailedCheck = 1, kExitConfig = 2, kExitNonConvergence = 3 };

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<BinaryQuadraticForm> default_forms() {
    return {{1, 0, 1}, {2, -2, 1}, {1, 0, 2}, {1, 1, 1}};
}

struct RunConfig {
    /// empty means every registered suite
    std::vector<std::string> suites;
    std::size_t qseries_order = 256;
    std::vector<BinaryQuadraticForm> forms = default_forms();
    /// keyed by full record name, or by the name with its "[...]" suffix removed
    std::map<std::string, double> tol_overrides;
    std::optional<std::string> output_path;
    ReportFormat output_format = ReportFormat::json;
};

/// Handed to each suite; collects records and remembers engine failures.
class SuiteContext {
public:
    SuiteContext(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

    [[nodiscard]] const RunConfig& config() const { return config_; }
    /// for suite-specific human output (tables)
    std::ostream& out() { return out_; }

    /// Runs f, which returns {lhs, rhs} as ApproxValues, and records the
    /// comparison. A NonConvergence becomes a failed record.
    template <class F>
    void compare(const std::string& name, const std::string& anchor, double tol, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        VerificationRecord rec;
        try {
            const std::pair<ApproxValue, ApproxValue> sides = f();
            rec = make_record(name, anchor, sides.first.value, sides.second.value,
                              sides.first.error_bound + sides.second.error_bound, tol);
        } catch (const NonConvergence& e) {
            rec = failed_record(name, anchor, tol, e);
        }
        rec.runtime_ms = elapsed_ms(start);
        records_.push_back(std::move(rec));
    }

    /// Runs f, which returns finished records. A NonConvergence becomes one
    /// failed record under `name`.
    template <class F>
    void block(const std::string& name, const std::string& anchor, double tol, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        try {
            std::vector<VerificationRecord> recs = f();
            const std::int64_t ms = elapsed_ms(start);
            for (auto& r : recs) {
                r.runtime_ms = ms;
                records_.push_back(std::move(r));
            }
        } catch (const NonConvergence& e) {
            VerificationRecord rec = failed_record(name, anchor, tol, e);
            rec.runtime_ms = elapsed_ms(start);
            records_.push_back(std::move(rec));
        }
    }

    /// Exact check: the number of mismatches must be zero.
    template <class F>
    void count_mismatches(const std::string& name, const std::string& anchor, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        const auto mismatches = static_cast<double>(f());
        VerificationRecord rec = make_record(name, anchor, mismatches, 0.0, 0.0, 0.0);
        rec.runtime_ms = elapsed_ms(start);
        records_.push_back(std::move(rec));
    }

    void add(VerificationRecord rec) { records_.push_back(std::move(rec)); }

    [[nodiscard]] std::vector<VerificationRecord>& records() { return records_; }
    [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

private:
    VerificationRecord failed_record(const std::string& name, const std::string& anchor, double tol, const NonConvergence& e) {
        failures_.push_back(name + ": " + e.what());
        VerificationRecord rec = make_record(name, anchor, e.best_value, std::numeric_limits<double>::quiet_NaN(),
                                             e.achieved_bound, tol);
        rec.pass = false;
        return rec;
    }

    static std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }

    const RunConfig& config_;
    std::ostream& out_;
    std::vector<VerificationRecord> records_;
    std::vector<std::string> failures_;
};

using SuiteFn = std::function<void(SuiteContext&)>;

struct SuiteEntry {
    std::string name;
    SuiteFn fn;
};

/// Ordered: records are reported suite by suite in registry order.
using SuiteRegistry = std::vector<SuiteEntry>;

namespace suites {

inline std::string with_form(const std::string& base, const BinaryQuadraticForm& q) { return base + "[" + q.to_string() + "]"; }

inline void triple_product(SuiteContext& ctx) {
    const std::size_t n = ctx.config().qseries_order;
    ctx.count_mismatches("triple-product.coefficients[order=" + std::to_string(n) + "]",
                         "sum q^(n^2) = prod (1 - q^(2n)) (1 + q^(2n-1))^2", [n] {
                             const QSeries theta = theta_qseries(n);
                             const QSeries prod = triple_product_qseries(n);
                             std::size_t bad = 0;
                             for (std::size_t k = 0; k <= n; ++k) bad += theta[k] != prod[k] ? 1 : 0;
                             return bad;
                         });
}

inline void two_squares(SuiteContext& ctx) {
    const auto n = static_cast<std::int64_t>(ctx.config().qseries_order);
    const std::string range = "[n<=" + std::to_string(n) + "]";
    ctx.count_mismatches("two-squares.brute-vs-divisor" + range, "r(n) = 4 sum_{d | n} chi(d)", [n] {
        std::int64_t bad = 0;
        for (std::int64_t k = 1; k <= n; ++k) bad += r_bruteforce(k) != r_divisor(k) ? 1 : 0;
        return bad;
    });
    ctx.count_mismatches("two-squares.theta-squared-vs-divisor" + range, "theta(q)^2 = 1 + sum r(n) q^n", [n] {
        const auto order = static_cast<std::size_t>(n);
        const QSeries theta = theta_qseries(order);
        const QSeries sq = qs_mul(theta, theta);
        std::int64_t bad = sq[0] != 1 ? 1 : 0;
        for (std::int64_t k = 1; k <= n; ++k) bad += sq[static_cast<std::size_t>(k)] != r_divisor(k) ? 1 : 0;
        return bad;
    });
}

inline void integral(SuiteContext& ctx) {
    const double pi = std::numbers::pi;
    ctx.compare("integral.exp-I-vs-gamma-ratio", "exp(I) = sqrt(2 pi) Gamma(3/4) / Gamma(1/4)", 1e-10, [&] {
        const ApproxValue lhs = exp(integral_I());
        const ApproxValue rhs = std::sqrt(2 * pi) * (gamma_integral(0.75) / gamma_integral(0.25));
        return std::pair{lhs, rhs};
    });
    ctx.compare("integral.gamma-reflection", "Gamma(1/4) Gamma(3/4) = pi sqrt 2", 1e-10, [&] {
        return std::pair{gamma_integral(0.25) * gamma_integral(0.75), exact(pi * std::numbers::sqrt2)};
    });
    ctx.compare("integral.gammaL-vs-product[s=2]", "Gamma(s) L(s) = int t^(s-1) / (e^t + e^-t) dt", 1e-10,
                [] { return std::pair{gammaL_integral(2.0), gamma_gauss(2.0) * L_chi4(2.0)}; });
    for (const auto& q : ctx.config().forms) {
        const double sqrt_d = std::sqrt(q.discriminant());
        ctx.compare(with_form("integral.f-at-1", q), "f(1) = -2 pi / sqrt(D)", 1e-10,
                    [&] { return std::pair{f_form(q, 1.0), exact(-2 * pi / sqrt_d)}; });
        ctx.compare(with_form("integral.f-prime-at-1", q), "f'(1) = -(4 pi / sqrt(D)) log sqrt(a/D)", 1e-8, [&] {
            return std::pair{f_form_derivative_at_1(q), exact(-(4 * pi / sqrt_d) * 0.5 * std::log(q.a() / q.discriminant()))};
        });
    }
}

inline void special_values(SuiteContext& ctx) {
    const double pi = std::numbers::pi;
    ctx.compare("special-values.zeta-2", "zeta(2) = pi^2 / 6", 1e-12, [&] { return std::pair{zeta(2.0), exact(pi * pi / 6)}; });
    ctx.compare("special-values.L-at-1", "L(1) = pi / 4", 1e-12, [&] { return std::pair{L_chi4(1.0), exact(pi / 4)}; });
    ctx.compare("special-values.zeta-laurent-constant", "zeta(s) = 1/(s-1) + gamma + O(s-1)", 1e-5, [] {
        const double s = 1 + 1e-5;
        return std::pair{zeta(s) - exact(1 / (s - 1)), euler_gamma()};
    });
    ctx.compare("special-values.gauss-vs-integral[s=0.25]", "Gamma(s) = lim n! n^s / (s (s+1) ... (s+n))", 1e-10,
                [] { return std::pair{gamma_gauss(0.25), gamma_integral(0.25)}; });
    ctx.compare("special-values.gauss-vs-integral[s=0.75]", "Gamma(s) = lim n! n^s / (s (s+1) ... (s+n))", 1e-10,
                [] { return std::pair{gamma_gauss(0.75), gamma_integral(0.75)}; });
}

inline void epstein(SuiteContext& ctx) {
    constexpr std::int64_t kDirectRadius = 1000;
    for (const auto& q : ctx.config().forms) {
        for (double s : {1.25, 1.5, 2.0, 3.0}) {
            ctx.compare("epstein.direct-vs-accelerated[" + q.to_string() + ";s=" + format_shortest(s) + "]",
                        "zeta(s, Q) = sum' Q(m, n)^-s", 0.0,
                        [&] { return std::pair{epstein_direct(q, s, kDirectRadius), epstein_accelerated(q, s)}; });
        }
    }
    const BinaryQuadraticForm unit(1, 0, 1);
    for (double s : {1.5, 2.0, 3.0, 1 + std::ldexp(1.0, -10)}) {
        ctx.compare("epstein.dirichlet-series[s=" + format_shortest(s) + "]", "zeta(s, x^2 + y^2) = 4 zeta(s) L(s)", 1e-9,
                    [&] { return std::pair{epstein_accelerated(unit, s), 4.0 * (zeta(s) * L_chi4(s))}; });
    }
    ctx.compare("epstein.unimodular-pair[s=1.5]", "Q' = x^2 + (x - y)^2 gives zeta(s, Q') = zeta(s, Q)", 1e-12, [] {
        return std::pair{epstein_accelerated({1, 0, 1}, 1.5), epstein_accelerated({2, -2, 1}, 1.5)};
    });
    for (const auto& q : ctx.config().forms) {
        ctx.compare(with_form("epstein.swap-invariance", q), "zeta(s, Q) is invariant under (x, y) -> (y, x)", 1e-12,
                    [&] { return std::pair{epstein_accelerated(q, 2.0), epstein_accelerated({q.c(), q.b(), q.a()}, 2.0)}; });
    }
}

inline void kronecker(SuiteContext& ctx) {
    const std::string kronecker_anchor = "lim (sqrt(D)/(4 pi)) zeta(s, Q) - zeta(2s-1) = log(sqrt(a/D) / |eta(z_Q)|^2)";
    for (const auto& q : ctx.config().forms) {
        ctx.compare(with_form("kronecker.lhs-vs-rhs", q), kronecker_anchor, 1e-6,
                    [&] { return std::pair{kronecker_lhs(q, 1e-7), kronecker_rhs(q)}; });
        ctx.compare(with_form("kronecker.l1-series", q), "L1 = -log |eta(z_Q)|^2", 1e-10, [&] {
            const ApproxValue log_eta = log(eta_uhp(q.z_q()).modulus());
            return std::pair{l1_series(q), -2.0 * log_eta};
        });
    }
    ctx.block("kronecker.target-limit", "lim (2/pi) zeta(s) L(s) - zeta(2s-1) = I", 1e-8, [] {
        VerificationRecord r = target_limit_check(1e-8);
        r.name = "kronecker.target-limit";
        return std::vector<VerificationRecord>{r};
    });
    ctx.block("kronecker.derivative", "d/ds Gamma(s) L(s) at s=1 = pi I / 2", 1e-6, [] {
        const DerivativeRoutes d = derivative_routes();
        const std::string anchor = "d/ds Gamma(s) L(s) at s=1 = -gamma pi/4 + L'(1) = pi I / 2";
        auto rec = [&](const char* name, const ApproxValue& x, const ApproxValue& y) {
            return make_record(std::string("kronecker.derivative[") + name + "]", anchor, x.value, y.value,
                               x.error_bound + y.error_bound, 1e-6);
        };
        return std::vector<VerificationRecord>{rec("series-vs-difference", d.from_series, d.from_difference),
                                               rec("series-vs-integral", d.from_series, d.from_integral),
                                               rec("difference-vs-integral", d.from_difference, d.from_integral)};
    });
}

inline void print_theta_table(std::ostream& os, const ThetaAssembly& t) {
    auto row = [&os](const char* tag, const char* what, const ApproxValue& v) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %s  %-40s %.17g  (bound %.2g)\n", tag, what, v.value, v.error_bound);
        os << buf;
    };
    os << "theta(i) four ways\n";
    row("A", "theta series", t.series);
    row("B", "sqrt(2) |eta(i)|", t.eta);
    row("C", "(2 pi)^(-1/4) sqrt(Gamma(1/4)/Gamma(3/4))", t.gamma_ratio);
    row("D", "Gamma(1/4) / (pi^(3/4) sqrt(2))", t.gamma_reflected);
    const VerificationRecord* w = &t.pairs.front();
    for (const auto& p : t.pairs) {
        if (p.abs_error > w->abs_error) w = &p;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "  largest difference: %s, %.3g\n", w->name.c_str(), w->abs_error);
    os << buf;
}

inline void theta(SuiteContext& ctx) {
    ctx.block("theta.assembly", "theta(i) = Gamma(1/4) / (pi^(3/4) sqrt 2)", 1e-10, [&ctx] {
        ThetaAssembly t = theta_at_i_assembly(1e-10);
        print_theta_table(ctx.out(), t);
        std::vector<VerificationRecord> recs;
        for (VerificationRecord r : t.pairs) {
            // "theta(i) A vs B" -> "theta.pair[A-B]"
            const std::string tag = r.name.substr(r.name.size() - 6);
            r.name = std::string("theta.pair[") + tag[0] + "-" + tag[5] + "]";
            if (r.name == "theta.pair[A-B]") set_tolerance(r, 1e-12);
            recs.push_back(std::move(r));
        }
        return recs;
    });
    const std::pair<double, double> points[] = {{0.0, 1.0}, {0.3, 1.7}, {0.0, 3.0}, {-2.3, 0.5}};
    for (const auto& [x, y] : points) {
        const std::string name = "theta.eta-quotient[z=" + format_shortest(x) + "+" + format_shortest(y) + "i]";
        ctx.block(name, "theta(z) = eta(z/2 + 1/2)^2 / eta(z + 1)", 1e-12, [&, x = x, y = y] {
            VerificationRecord r = verify_theta_eta_quotient(UpperHalfPoint(x, y), 1e-12);
            r.name = name;
            return std::vector<VerificationRecord>{r};
        });
    }
}

}  // namespace suites

/// Cheap exact suites first, the extrapolations last.
inline SuiteRegistry default_registry() {
    return {{"triple-product", suites::triple_product}, {"two-squares", suites::two_squares},
            {"integral", suites::integral},             {"special-values", suites::special_values},
            {"epstein", suites::epstein},               {"kronecker", suites::kronecker},
            {"theta", suites::theta}};
}

inline std::vector<std::string> suite_names(const SuiteRegistry& registry) {
    std::vector<std::string> names;
    for (const auto& e : registry) names.push_back(e.name);
    return names;
}

/// Throws ConfigError when the config breaks an invariant.
inline void validate(const RunConfig& config, const SuiteRegistry& registry) {
    if (config.qseries_order < 16) throw ConfigError("qseries order must be at least 16");
    for (const auto& s : config.suites) {
        const bool known = std::any_of(registry.begin(), registry.end(), [&](const SuiteEntry& e) { return e.name == s; });
        if (!known) throw ConfigError("unknown suite: " + s);
    }
    for (const auto& [name, tol] : config.tol_overrides) {
        if (!(tol >= 0) || !std::isfinite(tol)) throw ConfigError("tolerance for " + name + " must be finite and >= 0");
    }
}

struct RunResult {
    int exit_code = kExitOk;
    std::vector<VerificationRecord> records;
    std::vector<std::string> failures;
};

namespace detail {

inline std::string strip_params(const std::string& name) {
    const auto pos = name.find('[');
    return pos == std::string::npos ? name : name.substr(0, pos);
}

inline void print_records(std::ostream& os, const std::vector<VerificationRecord>& records) {
    for (const auto& r : records) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  |lhs-rhs| %-10.3g allowed %-10.3g %4lld ms  ", r.abs_error, r.combined_bound + r.tolerance,
                      static_cast<long long>(r.runtime_ms));
        os << (r.pass ? "PASS" : "FAIL") << buf << r.name << "\n";
    }
}

}  // namespace detail

/// Runs the selected suites and writes the report. Never throws for
/// configuration or IO problems; those come back as exit code 2.
inline RunResult execute(const RunConfig& config, std::ostream& out, const SuiteRegistry& registry = default_registry()) {
    RunResult result;
    try {
        validate(config, registry);
    } catch (const ConfigError& e) {
        out << "error: " << e.what() << "\n";
        result.exit_code = kExitConfig;
        return result;
    }

    std::map<std::string, bool> override_used;
    for (const auto& [name, tol] : config.tol_overrides) override_used[name] = false;

    for (const auto& entry : registry) {
        const bool selected = config.suites.empty() ||
                              std::find(config.suites.begin(), config.suites.end(), entry.name) != config.suites.end();
        if (!selected) continue;
        SuiteContext ctx(config, out);
        entry.fn(ctx);
        auto& recs = ctx.records();
        for (auto& r : recs) {
            auto it = config.tol_overrides.find(r.name);
            if (it == config.tol_overrides.end()) it = config.tol_overrides.find(detail::strip_params(r.name));
            if (it != config.tol_overrides.end()) {
                set_tolerance(r, it->second);
                override_used[it->first] = true;
            }
        }
        std::stable_sort(recs.begin(), recs.end(),
                         [](const VerificationRecord& x, const VerificationRecord& y) { return x.name < y.name; });
        result.records.insert(result.records.end(), recs.begin(), recs.end());
        result.failures.insert(result.failures.end(), ctx.failures().begin(), ctx.failures().end());
    }

    detail::print_records(out, result.records);
    const ReportSummary s = summarize(result.records);
    out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << "\n";
    for (const auto& f : result.failures) out << "no convergence: " << f << "\n";
    for (const auto& [name, used] : override_used) {
        if (!used) out << "warning: --tol " << name << " matched no record\n";
    }

    if (!result.failures.empty()) {
        result.exit_code = kExitNonConvergence;
    } else if (s.failed > 0) {
        result.exit_code = kExitFailedCheck;
    }

    if (config.output_path) {
        try {
            emit_report(result.records, config.output_format, *config.output_path);
        } catch (const ReportError& e) {
            out << "error: " << e.what() << "\n";
            result.exit_code = kExitConfig;
        }
    }
    return result;
}

inline int run(const RunConfig& config, std::ostream& out, const SuiteRegistry& registry = default_registry()) {
    return execute(config, out, registry).exit_code;
}

/// "a,b,c" -> form; throws ConfigError.
inline BinaryQuadraticForm parse_form(const std::string& text) {
    std::vector<double> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        char* end = nullptr;
        const double v = std::strtod(piece.c_str(), &end);
        if (piece.empty() || end != piece.c_str() + piece.size()) throw ConfigError("bad form coefficient in '" + text + "'");
        coeffs.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coeffs.size() != 3) throw ConfigError("form must be a,b,c: '" + text + "'");
    try {
        return {coeffs[0], coeffs[1], coeffs[2]};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("form ") + text + ": " + e.what());
    }
}

/// "name=value" -> (name, value); throws ConfigError.
inline std::pair<std::string, double> parse_tolerance(const std::string& text) {
    const auto eq = text.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) throw ConfigError("tolerance must be name=value: '" + text + "'");
    const std::string value = text.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size()) throw ConfigError("bad tolerance value in '" + text + "'");
    return {text.substr(0, eq), v};
}

/// Full command-line entry: parses argv, runs, returns the exit code.
inline int verify_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                       const SuiteRegistry& registry = default_registry()) {
    CLI::App app{"Numerical and exact verification of theta, eta and Epstein zeta identities", "verify"};
    std::vector<std::string> suite_args;
    std::size_t order = 256;
    std::vector<std::string> form_args;
    std::vector<std::string> tol_args;
    std::string json_path;
    std::string markdown_path;

    app.add_option("suites", suite_args, "suites to run (default: all)")->check(CLI::IsMember(suite_names(registry)));
    app.add_option("--order", order, "q-series order and two-squares range (>= 16)");
    app.add_option("--form", form_args, "quadratic form a,b,c (repeatable; replaces the default forms)");
    app.add_option("--tol", tol_args, "tolerance override name=value (repeatable)");
    auto* json_opt = app.add_option("--json", json_path, "write a JSON report");
    auto* md_opt = app.add_option("--markdown", markdown_path, "write a Markdown report");
    json_opt->excludes(md_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    RunConfig config;
    try {
        config.suites = suite_args;
        config.qseries_order = order;
        if (!form_args.empty()) {
            config.forms.clear();
            for (const auto& f : form_args) config.forms.push_back(parse_form(f));
        }
        for (const auto& t : tol_args) {
            const auto [name, value] = parse_tolerance(t);
            config.tol_overrides[name] = value;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    if (*json_opt) {
        config.output_path = json_path;
        config.output_format = ReportFormat::json;
    } else if (*md_opt) {
        config.output_path = markdown_path;
        config.output_format = ReportFormat::markdown;
    }
    return run(config, out, registry);
}

}  // namespace thetaval
