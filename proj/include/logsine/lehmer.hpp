#pragma once

// Lehmer's polynomials p_n, q_n and the closed forms they give for the
// central binomial series and the shifted log-sine integral at s = -n.
//
//   p_{-1} = 0, q_{-1} = 1,
//   p_{n+1} = 2(nx+1) p_n + 2x(1-x) p_n' + q_n,
//   q_{n+1} = (2(n+1)x+1) q_n + 2x(1-x) q_n'.

#include <string>
#include <vector>

#include "logsine/exact.hpp"
#include "logsine/report.hpp"

namespace logsine {

struct LehmerPair {
    int n = -1;
    IntPolynomial p;
    IntPolynomial q;
};

/// (p_n, q_n) for n >= -1. Results are memoized process-wide; concurrent
/// callers share one table (single writer, many readers).
LehmerPair lehmer_pair(int n);

/// Checks the observed shape of p_n, q_n for -1 <= n <= n_max: non-negative
/// coefficients, deg p_n = max(n-1, 0) and deg q_n = n for n >= 1. Returns a
/// description of every violation; empty means none.
std::vector<std::string> lehmer_shape_violations(int n_max);

/// An exact value of the form
///
///   rational_part + arcsin_part * z asin(z) / sqrt(1 - z^2)
///                 + pi_part     * pi z    / sqrt(1 - z^2),
///
/// with x = z^2 rational. The transcendental factors are only touched by
/// evaluate().
struct ClosedFormValue {
    enum class Kind { rational, algebraic };

    Kind kind = Kind::rational;
    Rational z_squared;
    Rational rational_part;
    Rational arcsin_part;
    Rational pi_part;

    long double evaluate() const;
};

/// zeta_CB(-n; z) for 0 < z < 1.
ClosedFormValue zeta_cb_closed(int n, const Rational& z);
/// zeta_CB(-n; z) given only x = z^2 in (0, 1).
ClosedFormValue zeta_cb_closed_sq(int n, const Rational& z_squared);

/// eta_CB(-n; z) for 0 < z < 1.
ClosedFormValue eta_cb_closed(int n, const Rational& z);
ClosedFormValue eta_cb_closed_sq(int n, const Rational& z_squared);

/// Floating renders at an arbitrary z in (0, 1).
long double zeta_cb_closed_value(int n, long double z);
long double eta_cb_closed_value(int n, long double z);

/// SLs(-n; sigma) = x p_n(x) / (2^n (1-x)^{n+1}) with x = sin^2(sigma/2).
Rational sls_closed(int n, const Rational& x);

/// zeta_CB(-n; z) - (sigma/pi) eta_CB(-n; z) assembled from the two closed
/// forms, using sigma = 2 asin(z) to turn the pi term into an arcsin term.
/// The arcsin part of the result cancels exactly.
ClosedFormValue sls_from_closed_forms(int n, const Rational& x);

/// Taylor coefficients of pi z e^{t/2} / sqrt(1 - z^2 e^t), times n!, against
/// eta_CB(1 - n; z) for n = 0..order. One report per coefficient, passing
/// when the relative difference is below rel_tolerance.
std::vector<EvalReport> eta_generating_check(double z, int order, double rel_tolerance = 1e-8);

}  // namespace logsine
