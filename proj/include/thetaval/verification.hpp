#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace thetaval {

/// One named comparison: two computed sides, the bound on their combined
/// numerical error, and a configured tolerance. A check passes only when
/// |lhs - rhs| <= combined_bound + tolerance.
struct VerificationRecord {
    std::string name;
    std::string paper_anchor;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_error = 0.0;
    double combined_bound = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::int64_t runtime_ms = 0;
};

inline VerificationRecord make_record(std::string name, std::string anchor, double lhs, double rhs, double combined_bound,
                                      double tolerance) {
    VerificationRecord r;
    r.name = std::move(name);
    r.paper_anchor = std::move(anchor);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_error = std::abs(lhs - rhs);
    r.combined_bound = combined_bound;
    r.tolerance = tolerance;
    r.pass = r.abs_error <= combined_bound + tolerance;
    return r;
}

/// Re-evaluates the pass flag after the tolerance has been changed.
inline void set_tolerance(VerificationRecord& r, double tolerance) {
    r.tolerance = tolerance;
    r.pass = r.abs_error <= r.combined_bound + tolerance;
}

}  // namespace thetaval
