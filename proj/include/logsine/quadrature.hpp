#pragma once

// Double-exponential (tanh-sinh) quadrature and the log-sine integrals built
// on it: the defining integral of SLs(s; sigma), the integral forms of
// zeta_CB and eta_CB, and the classical identities of Euler, Clausen and
// Yujobo.

#include <functional>

#include "logsine/report.hpp"

namespace logsine {

struct QuadConfig {
    /// Refinement levels; level l uses step 2^-l in the transformed variable.
    int levels = 10;
    /// Refinement stops early once successive levels agree to this.
    double abs_tol = 1e-10;

    /// Throws DomainError when levels < 3.
    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double est_err = 0.0;
    long evaluations = 0;
};

/// Integrand on [a, b]. Besides the abscissa it receives the distances
/// x - a and b - x, computed without cancellation, so endpoint
/// singularities can be evaluated accurately.
using Integrand = std::function<double(double x, double from_left, double from_right)>;

/// Integral of f over (a, b). est_err is the difference of the last two
/// levels, floored at a few ulps of the absolute integral. Throws
/// NumericError on a non-finite integrand value.
IntegralResult tanh_sinh(const Integrand& f, double a, double b, const QuadConfig& config = {});

/// SLs(s; sigma) from its defining integral; s > 1, 0 < sigma <= pi.
IntegralResult sls_integral(double s, double sigma, const QuadConfig& config = {});
/// zeta_CB(s; sin(sigma/2)) from its integral form; s > 1, 0 < sigma < pi.
IntegralResult zcb_integral(double s, double sigma, const QuadConfig& config = {});
/// eta_CB(s; sin(sigma/2)) from its integral form; s > 1, 0 < sigma < pi.
IntegralResult ecb_integral(double s, double sigma, const QuadConfig& config = {});

/// (1 - 2^-3) zeta(3) = (pi^2/4) log 2 + 2 int_0^{pi/2} theta log(sin theta).
EvalReport euler_identity_check(const QuadConfig& config = {}, double tolerance = 1e-9);

/// sum sin(n x)/n^2 = -x log 2 - int_0^x log(sin(theta/2)), 0 < x < 2 pi.
EvalReport clausen_identity_check(double x, const QuadConfig& config = {}, double tolerance = 1e-8);

enum class YujoboKind { odd_zeta, mzv };

/// Yujobo's Bernoulli-polynomial integrals for zeta(2n+1) and zeta(1, 2n).
EvalReport yujobo_identity_check(int n, YujoboKind which, const QuadConfig& config = {},
                                 double tolerance = 1e-7);

}  // namespace logsine
