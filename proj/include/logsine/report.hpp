#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "logsine/exact.hpp"

namespace logsine {

/// Outcome of checking one identity instance.
///
/// Exact reports compare Rationals and carry no tolerance; numeric reports
/// pass when abs_diff <= tolerance.
struct EvalReport {
    std::string identity_id;
    std::string lhs;
    std::string rhs;
    bool exact = false;
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::int64_t runtime_ms = 0;
};

EvalReport make_exact_report(std::string id, const Rational& lhs, const Rational& rhs);
EvalReport make_numeric_report(std::string id, double lhs, double rhs, double tolerance);

/// Shortest round-trip decimal for a double.
std::string format_real(double v);

bool all_pass(const std::vector<EvalReport>& reports);

/// Wall-clock milliseconds for stamping reports.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace logsine
