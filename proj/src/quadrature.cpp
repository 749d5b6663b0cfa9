#include "logsine/quadrature.hpp"

#include <cfloat>
#include <cmath>
#include <string>
#include <vector>

#include "logsine/errors.hpp"
#include "logsine/polybernoulli.hpp"
#include "logsine/series.hpp"
#include "logsine/special.hpp"

namespace logsine {

namespace {

constexpr double kTMax = 6.0;
constexpr int kMinLevel = 3;

// -2 log(sin(theta/2) / sin(sigma/2)) with theta = sigma - d, accurate when
// d is tiny.
double log_sine_ratio(double theta, double d, double sigma) {
    if (d < sigma / 2.0) {
        const double delta = -2.0 * std::cos((theta + sigma) / 4.0) * std::sin(d / 4.0) / std::sin(sigma / 2.0);
        return -2.0 * std::log1p(delta);
    }
    return -2.0 * (std::log(std::sin(theta / 2.0)) - std::log(std::sin(sigma / 2.0)));
}

double inverse_gamma_shifted(double s) {
    // 1 / Gamma(s - 1); exact factorial when s is an integer.
    if (s == std::floor(s) && s <= 170.0) {
        double f = 1.0;
        for (int i = 2; i <= static_cast<int>(s) - 2; ++i) f *= i;
        return 1.0 / f;
    }
    return static_cast<double>(1.0L / gamma_fn(static_cast<long double>(s) - 1.0L));
}

void require_s(double s) {
    if (!(s > 1.0) || !std::isfinite(s))
        throw DomainError("the log-sine integral converges only for s > 1, got s = " + format_real(s));
}

void require_sigma(double sigma, bool allow_pi) {
    const bool ok = sigma > 0.0 && (allow_pi ? sigma <= kPi : sigma < kPi);
    if (!ok) throw DomainError(std::string("sigma must lie in (0, pi") + (allow_pi ? "]" : ")") + ", got " +
                               format_real(sigma));
}

enum class Weight { shifted, theta, flat };

IntegralResult log_sine_integral(Weight weight, double s, double sigma, const QuadConfig& config) {
    const double prefactor = inverse_gamma_shifted(s) * (weight == Weight::flat ? kPi : 1.0);
    const double exponent = s - 2.0;
    const Integrand f = [=](double /*x*/, double theta, double d) {
        const double power = exponent == 0.0 ? 1.0 : std::pow(log_sine_ratio(theta, d, sigma), exponent);
        switch (weight) {
            case Weight::shifted: return -d * power;
            case Weight::theta: return theta * power;
            case Weight::flat: break;
        }
        return power;
    };
    IntegralResult r = tanh_sinh(f, 0.0, sigma, config);
    r.value *= prefactor;
    r.est_err *= std::abs(prefactor);
    return r;
}

std::vector<double> to_doubles(const RationalPolynomial& p) {
    std::vector<double> out;
    for (const auto& c : p.coefficients()) out.push_back(c.to_double());
    return out;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

void QuadConfig::validate() const {
    if (levels < kMinLevel) throw DomainError("quadrature needs at least 3 refinement levels");
    if (!(abs_tol >= 0.0)) throw DomainError("abs_tol must be non-negative");
}

IntegralResult tanh_sinh(const Integrand& f, double a, double b, const QuadConfig& config) {
    config.validate();
    if (!(b > a)) throw DomainError("tanh_sinh needs a < b");
    const double half = (b - a) / 2.0;
    long evaluations = 0;

    // Weighted integrand at transformed abscissa t, and its magnitude.
    auto node = [&](double t, long double& magnitude) -> long double {
        const double u = kPi / 2.0 * std::sinh(std::abs(t));
        const double e = std::exp(-2.0 * u);
        const double near = half * 2.0 * e / (1.0 + e);  // distance to the closer end
        const double far = half * 2.0 / (1.0 + e);
        const double w = half * kPi / 2.0 * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (near <= 0.0 || w == 0.0) return 0.0L;
        const double from_left = t < 0.0 ? near : far;
        const double from_right = t < 0.0 ? far : near;
        const double x = t < 0.0 ? a + near : b - near;
        const double v = f(x, from_left, from_right);
        ++evaluations;
        if (!std::isfinite(v))
            throw NumericError("non-finite integrand at x = " + format_real(x));
        const long double wv = static_cast<long double>(w) * v;
        magnitude += std::abs(wv);
        return wv;
    };

    long double sum = 0.0L;
    long double magnitude = 0.0L;
    const int k0 = static_cast<int>(kTMax);
    for (int k = -k0; k <= k0; ++k) sum += node(k, magnitude);
    long double h = 1.0L;
    long double estimate = sum;
    long double diff = 0.0L;
    for (int level = 1; level <= config.levels; ++level) {
        h /= 2.0L;
        const long steps = static_cast<long>(kTMax / h);
        for (long k = 1; k <= steps; k += 2) {
            const double t = static_cast<double>(k * h);
            sum += node(t, magnitude) + node(-t, magnitude);
        }
        const long double next = h * sum;
        diff = std::abs(next - estimate);
        estimate = next;
        if (level >= kMinLevel && diff <= config.abs_tol) break;
    }
    IntegralResult r;
    r.value = static_cast<double>(estimate);
    const long double floor = 4.0L * DBL_EPSILON * h * magnitude;
    r.est_err = static_cast<double>(std::max(diff, floor));
    r.evaluations = evaluations;
    return r;
}

IntegralResult sls_integral(double s, double sigma, const QuadConfig& config) {
    require_s(s);
    require_sigma(sigma, true);
    return log_sine_integral(Weight::shifted, s, sigma, config);
}

IntegralResult zcb_integral(double s, double sigma, const QuadConfig& config) {
    require_s(s);
    require_sigma(sigma, false);
    return log_sine_integral(Weight::theta, s, sigma, config);
}

IntegralResult ecb_integral(double s, double sigma, const QuadConfig& config) {
    require_s(s);
    require_sigma(sigma, false);
    return log_sine_integral(Weight::flat, s, sigma, config);
}

EvalReport euler_identity_check(const QuadConfig& config, double tolerance) {
    Stopwatch sw;
    const double lhs = (1.0 - 1.0 / 8.0) * zeta3().re;
    const IntegralResult integral = tanh_sinh(
        [](double, double theta, double) { return theta * std::log(std::sin(theta)); }, 0.0, kPi / 2.0, config);
    const double rhs = kPi * kPi / 4.0 * std::log(2.0) + 2.0 * integral.value;
    EvalReport r = make_numeric_report("euler", lhs, rhs, tolerance);
    r.runtime_ms = sw.elapsed_ms();
    return r;
}

EvalReport clausen_identity_check(double x, const QuadConfig& config, double tolerance) {
    if (!(x > 0.0 && x < 2.0 * kPi)) throw DomainError("Clausen identity needs 0 < x < 2 pi");
    Stopwatch sw;
    const double lhs = polylog_unit_circle(2, x).im;
    const double to_two_pi = 2.0 * kPi - x;
    const IntegralResult integral = tanh_sinh(
        [to_two_pi](double theta, double from_left, double from_right) {
            const double sine = theta <= kPi ? std::sin(from_left / 2.0) : std::sin((to_two_pi + from_right) / 2.0);
            return std::log(sine);
        },
        0.0, x, config);
    const double rhs = -x * std::log(2.0) - integral.value;
    EvalReport r = make_numeric_report("clausen[x=" + format_real(x) + "]", lhs, rhs, tolerance);
    r.runtime_ms = sw.elapsed_ms();
    return r;
}

EvalReport yujobo_identity_check(int n, YujoboKind which, const QuadConfig& config, double tolerance) {
    if (n < 1) throw DomainError("Yujobo identities need n >= 1");
    Stopwatch sw;
    const double two_pi = 2.0 * kPi;

    std::vector<double> poly;
    double coefficient = 0.0;
    double lhs = 0.0;
    std::string id;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    if (which == YujoboKind::odd_zeta) {
        poly = to_doubles(bernoulli_polynomial(2 * n));
        coefficient = sign * std::pow(two_pi, 2 * n - 1) / std::tgamma(2.0 * n + 1.0);
        lhs = zeta_value(2 * n + 1).re;
        id = "yujobo_odd_zeta[n=" + std::to_string(n) + "]";
    } else {
        poly = to_doubles(bernoulli_polynomial(1) * bernoulli_polynomial(2 * n - 1));
        coefficient = sign * std::pow(two_pi, 2 * n - 1) / (2.0 * std::tgamma(2.0 * n));
        lhs = mzv_1_2n(n).re;
        id = "yujobo_mzv[n=" + std::to_string(n) + "]";
    }

    // log(2 sin(theta/2)) is singular at both 0 and 2 pi; each half of the
    // range keeps its singular end at a transformed endpoint.
    const IntegralResult left = tanh_sinh(
        [&](double theta, double from_left, double) {
            return horner(poly, theta / two_pi) * std::log(2.0 * std::sin(from_left / 2.0));
        },
        0.0, kPi, config);
    const IntegralResult right = tanh_sinh(
        [&](double theta, double, double from_right) {
            return horner(poly, theta / two_pi) * std::log(2.0 * std::sin(from_right / 2.0));
        },
        kPi, two_pi, config);
    const double rhs = coefficient * (left.value + right.value);
    EvalReport r = make_numeric_report(id, lhs, rhs, tolerance);
    r.runtime_ms = sw.elapsed_ms();
    return r;
}

}  // namespace logsine
