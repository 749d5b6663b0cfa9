#include "logsine/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

namespace logsine {

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

EvalReport make_exact_report(std::string id, const Rational& lhs, const Rational& rhs) {
    EvalReport r;
    r.identity_id = std::move(id);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.exact = true;
    r.pass = lhs == rhs;
    r.abs_diff = r.pass ? 0.0 : static_cast<double>((lhs - rhs).abs().to_long_double());
    return r;
}

EvalReport make_numeric_report(std::string id, double lhs, double rhs, double tolerance) {
    EvalReport r;
    r.identity_id = std::move(id);
    r.lhs = format_real(lhs);
    r.rhs = format_real(rhs);
    r.abs_diff = std::abs(lhs - rhs);
    r.tolerance = tolerance;
    // NaN on either side fails.
    r.pass = r.abs_diff <= tolerance;
    return r;
}

bool all_pass(const std::vector<EvalReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const EvalReport& r) { return r.pass; });
}

}  // namespace logsine
