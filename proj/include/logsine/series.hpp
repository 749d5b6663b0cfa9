#pragma once

// Floating-point evaluation of the central binomial series
//
//   zeta_CB(s; z) = sum_{m>=1} (2z)^{2m} / (C(2m, m) m^s),
//   eta_CB(s; z)  = sum_{m>=0} (2z)^{2m+1} / (C(2m+1, m+1/2) (m+1/2)^s),
//
// which converge for every complex s when |z| < 1, and of the continuation
// SLs(s; sigma) = zeta_CB(s; sin(sigma/2)) - (sigma/pi) eta_CB(s; sin(sigma/2)).
// Also hosts the zeta values, unit-circle polylogarithms and the double sum
// zeta(1, 2n) used by the classical integral identities.
//
// Sums are accumulated in extended precision; every result carries an
// a posteriori bound covering truncation and rounding.

#include <complex>
#include <vector>

namespace logsine {

struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
    double abs_err = 0.0;
    /// Terms summed to produce the value (0 when not a series).
    long terms = 0;

    std::complex<double> value() const { return {re, im}; }
};

struct SeriesConfig {
    long max_terms = 200000;
    double tail_tolerance = 1e-14;
    double z_cap = 0.95;

    /// Throws DomainError on max_terms < 1 or z_cap outside (0, 1).
    void validate() const;
};

/// Throws DomainError unless 0 < z <= z_cap, BudgetExceeded if the tail
/// bound does not reach tail_tolerance within max_terms.
ComplexValue zeta_cb_series(std::complex<double> s, double z, const SeriesConfig& config = {});
ComplexValue eta_cb_series(std::complex<double> s, double z, const SeriesConfig& config = {});

/// SLs(s; sigma) for 0 < sigma < pi via the central binomial series.
ComplexValue sls_continued(std::complex<double> s, double sigma, const SeriesConfig& config = {});

/// As sls_continued with sigma = 2 asin(z); the half-angle sine is taken as
/// given, so no rounding of sigma enters.
ComplexValue sls_continued_from_z(std::complex<double> s, long double z, const SeriesConfig& config = {});

/// First `count` terms of the zeta_CB / eta_CB sums as generated by the
/// term recurrence (index 0 is m = 1 for zeta_CB and m = 0 for eta_CB).
std::vector<std::complex<double>> zeta_cb_terms(std::complex<double> s, double z, int count);
std::vector<std::complex<double>> eta_cb_terms(std::complex<double> s, double z, int count);

/// Li_k(e^{i sigma}) for k >= 2 and 0 < sigma < 2 pi.
ComplexValue polylog_unit_circle(int k, double sigma, const SeriesConfig& config = {});

/// zeta(k) for integer k >= 2 by Euler-Maclaurin summation.
ComplexValue zeta_value(int k);
ComplexValue zeta3();

/// zeta(1, 2n) = sum_{0 < m1 < m2} 1 / (m1 m2^{2n}) for n >= 1.
ComplexValue mzv_1_2n(int n, const SeriesConfig& config = {});

/// Partial sums sum_{m2=2}^{M} H_{m2-1} / m2^{2n} for M = 2..count+1.
std::vector<double> mzv_1_2n_partial_sums(int n, int count);

}  // namespace logsine
