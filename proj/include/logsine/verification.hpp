#pragma once

// Identity suite tying the exact and floating engines together.

#include <vector>

#include "logsine/exact.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/report.hpp"
#include "logsine/series.hpp"

namespace logsine {

/// SLs(-n; pi/3) from Lehmer's polynomials against a third of the
/// anti-diagonal poly-Bernoulli sum, exactly, for 0 <= n <= n_max.
std::vector<EvalReport> verify_main_theorem_exact(int n_max);

/// sls_closed(n, x) against the continued series at sigma = 2 asin(sqrt x),
/// for 0 <= n <= n_max and each x in (0, 0.9]. Tolerance is the series
/// error bound plus 1e-10.
std::vector<EvalReport> verify_main_theorem_general(int n_max, const std::vector<Rational>& x_grid,
                                                    const SeriesConfig& series = {});

struct SuiteSelection {
    bool exact = true;
    bool series = true;
    bool quad = true;

    static SuiteSelection all() { return {}; }
    static SuiteSelection none() { return {false, false, false}; }
};

struct SuiteConfig {
    SuiteSelection selection;
    int n_max_exact = 30;
    int n_max_series = 8;
    std::vector<Rational> x_grid{Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(9, 10)};
    SeriesConfig series;
    QuadConfig quad;
};

/// Every selected check, in a fixed order: exact, then series, then
/// quadrature. Quadrature checks run concurrently but are merged in order.
std::vector<EvalReport> run_full_suite(const SuiteConfig& config = {});

}  // namespace logsine
