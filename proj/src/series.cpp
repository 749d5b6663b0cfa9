#include "logsine/series.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "logsine/errors.hpp"
#include "logsine/exact.hpp"
#include "logsine/report.hpp"
#include "logsine/special.hpp"

namespace logsine {

namespace {

using cld = std::complex<long double>;

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

struct RawSum {
    cld value;
    long double err = 0.0L;  // truncation + accumulated rounding
    long terms = 0;
};

enum class Family { zeta, eta };

void require_finite(std::complex<double> s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("s must be finite");
}

void require_z(long double z, const SeriesConfig& config) {
    if (!(z > 0.0L && z <= static_cast<long double>(config.z_cap)))
        throw DomainError("z must lie in (0, " + format_real(config.z_cap) + "], got " +
                          format_real(static_cast<double>(z)));
}

ComplexValue finish(const cld& v, long double err, long terms) {
    ComplexValue out;
    out.re = static_cast<double>(v.real());
    out.im = static_cast<double>(v.imag());
    if (!std::isfinite(out.re) || !std::isfinite(out.im)) throw NumericError("series value is not finite");
    // Conversion to double costs up to half an ulp per component.
    out.abs_err = static_cast<double>(err) + 2.0 * DBL_EPSILON * std::abs(std::complex<double>(out.re, out.im));
    out.terms = terms;
    return out;
}

// Terms are b_m * mu_m^{-s}: b_m is the real binomial part, advanced by its
// exact ratio, and mu_m^{-s} = exp(-s log mu_m) is formed afresh each time.
//
// For j >= m, |t_{j+1}/t_j| <= ratio_bound(m), which decreases to z^2, so
// once it drops below 1 the tail after t_m is at most |t_m| r / (1 - r).
RawSum central_binomial_sum(Family family, cld s, long double z, const SeriesConfig& config) {
    const long double z2 = z * z;
    const long double growth = std::max(0.0L, -s.real());
    const long double s_abs = std::abs(s);

    long m = family == Family::zeta ? 1 : 0;
    long double b = family == Family::zeta ? 2.0L * z2 : kPiL * z / 2.0L;

    CompensatedSum<long double> re, im;
    long double weighted = 0.0L;
    long terms = 0;
    for (;;) {
        const long double mu = family == Family::zeta ? static_cast<long double>(m) : m + 0.5L;
        const long double log_mu = std::log(mu);
        const cld t = b * std::exp(-s * log_mu);
        re.add(t.real());
        im.add(t.imag());
        const long double t_abs = std::abs(t);
        if (!std::isfinite(t_abs)) throw NumericError("non-finite series term at m = " + std::to_string(m));
        weighted += t_abs * (static_cast<long double>(m) + s_abs * std::abs(log_mu) + 4.0L);
        ++terms;

        const long double ml = static_cast<long double>(m);
        long double r;
        if (family == Family::zeta) {
            r = z2 * (2.0L * ml + 2.0L) / (2.0L * ml + 1.0L) * std::pow(1.0L + 1.0L / ml, growth);
            b *= 2.0L * z2 * (ml + 1.0L) / (2.0L * ml + 1.0L);
        } else {
            r = z2 * (2.0L * ml + 3.0L) / (2.0L * ml + 2.0L) * std::pow(1.0L + 1.0L / (ml + 0.5L), growth);
            b *= z2 * (2.0L * ml + 3.0L) / (2.0L * ml + 2.0L);
        }
        if (r < 1.0L) {
            const long double tail = t_abs * r / (1.0L - r);
            const auto tol = static_cast<long double>(config.tail_tolerance);
            if (t_abs < tol && tail < tol) {
                return {cld(re.value(), im.value()), tail + LDBL_EPSILON * weighted, terms};
            }
        }
        if (terms >= config.max_terms) {
            throw BudgetExceeded("series did not reach the tail tolerance within " +
                                     std::to_string(config.max_terms) + " terms",
                                 static_cast<double>(re.value()), static_cast<double>(im.value()), terms);
        }
        ++m;
    }
}

ComplexValue sls_combination(std::complex<double> s, long double sigma, long double z, const SeriesConfig& config) {
    const cld sl(s.real(), s.imag());
    const RawSum zeta = central_binomial_sum(Family::zeta, sl, z, config);
    const RawSum eta = central_binomial_sum(Family::eta, sl, z, config);
    const long double weight = sigma / kPiL;
    const cld v = zeta.value - weight * eta.value;
    const long double err = zeta.err + weight * eta.err +
                            2.0L * LDBL_EPSILON * (std::abs(zeta.value) + weight * std::abs(eta.value));
    return finish(v, err, zeta.terms + eta.terms);
}

std::vector<std::complex<double>> terms_of(Family family, std::complex<double> s, double z, int count) {
    std::vector<std::complex<double>> out;
    const cld sl(s.real(), s.imag());
    const long double z2 = static_cast<long double>(z) * z;
    long m = family == Family::zeta ? 1 : 0;
    long double b = family == Family::zeta ? 2.0L * z2 : kPiL * z / 2.0L;
    for (int i = 0; i < count; ++i, ++m) {
        const long double mu = family == Family::zeta ? static_cast<long double>(m) : m + 0.5L;
        const cld t = b * std::exp(-sl * std::log(mu));
        out.emplace_back(static_cast<double>(t.real()), static_cast<double>(t.imag()));
        const long double ml = static_cast<long double>(m);
        b *= family == Family::zeta ? 2.0L * z2 * (ml + 1.0L) / (2.0L * ml + 1.0L)
                                    : z2 * (2.0L * ml + 3.0L) / (2.0L * ml + 2.0L);
    }
    return out;
}

// Backward difference nabla^j f(n) of f(m) = m^{-k}, exactly.
long double backward_difference(int k, long n, int j) {
    Rational acc;
    BigInt binom = 1;
    for (int i = 0; i <= j; ++i) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n - i), static_cast<unsigned long>(k));
        const Rational term(binom, power);
        acc += i % 2 == 0 ? term : -term;
        binom = binom * (j - i) / (i + 1);
    }
    return acc.to_long_double();
}

// Rising factorial k (k+1) ... (k+p-1).
long double rising(int k, int p) {
    long double r = 1.0L;
    for (int i = 0; i < p; ++i) r *= static_cast<long double>(k + i);
    return r;
}

}  // namespace

void SeriesConfig::validate() const {
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
    if (!(z_cap > 0.0 && z_cap < 1.0)) throw DomainError("z_cap must lie in (0, 1)");
    if (!(tail_tolerance > 0.0)) throw DomainError("tail_tolerance must be positive");
}

ComplexValue zeta_cb_series(std::complex<double> s, double z, const SeriesConfig& config) {
    config.validate();
    require_finite(s);
    require_z(z, config);
    const RawSum raw = central_binomial_sum(Family::zeta, cld(s.real(), s.imag()), z, config);
    return finish(raw.value, raw.err, raw.terms);
}

ComplexValue eta_cb_series(std::complex<double> s, double z, const SeriesConfig& config) {
    config.validate();
    require_finite(s);
    require_z(z, config);
    const RawSum raw = central_binomial_sum(Family::eta, cld(s.real(), s.imag()), z, config);
    return finish(raw.value, raw.err, raw.terms);
}

ComplexValue sls_continued(std::complex<double> s, double sigma, const SeriesConfig& config) {
    config.validate();
    require_finite(s);
    if (!(sigma > 0.0 && sigma < kPi)) throw DomainError("sigma must lie in (0, pi)");
    const long double z = std::sin(static_cast<long double>(sigma) / 2.0L);
    require_z(z, config);
    return sls_combination(s, sigma, z, config);
}

ComplexValue sls_continued_from_z(std::complex<double> s, long double z, const SeriesConfig& config) {
    config.validate();
    require_finite(s);
    require_z(z, config);
    return sls_combination(s, 2.0L * std::asin(z), z, config);
}

std::vector<std::complex<double>> zeta_cb_terms(std::complex<double> s, double z, int count) {
    return terms_of(Family::zeta, s, z, count);
}

std::vector<std::complex<double>> eta_cb_terms(std::complex<double> s, double z, int count) {
    return terms_of(Family::eta, s, z, count);
}

// Direct sum up to M - 1, then the tail sum_{m>=M} w^m f(m) by repeated
// summation by parts:
//
//   sum_{m>=N} w^m f(m) = sum_{j<p} w^{N+j} nabla^j f(N+j) / (1-w)^{j+1}
//                         + sum_{m>=N+p} w^m nabla^p f(m) / (1-w)^p,
//
// where the last sum is at most |nabla^p f(N+p)| * 2/|1-w| since nabla^p f is
// monotone and partial sums of w^m are bounded by 2/|1-w|.
ComplexValue polylog_unit_circle(int k, double sigma, const SeriesConfig& config) {
    config.validate();
    if (k < 2) throw DomainError("polylog_unit_circle needs k >= 2, got " + std::to_string(k));
    if (!(sigma > 0.0 && sigma < 2.0 * kPi)) throw DomainError("sigma must lie in (0, 2 pi)");

    constexpr int p = 8;
    const long double sl = sigma;
    const cld w(std::cos(sl), std::sin(sl));
    const cld one_minus_w = 1.0L - w;
    const long double gap = 2.0L * std::sin(sl / 2.0L);  // |1 - w|

    long m_split = 16;
    long double bound = 0.0L;
    for (;;) {
        bound = rising(k, p) * std::pow(static_cast<long double>(m_split), -static_cast<long double>(k + p)) *
                (2.0L / gap) / std::pow(gap, static_cast<long double>(p));
        if (bound < static_cast<long double>(config.tail_tolerance) / 2.0L) break;
        if (m_split > config.max_terms)
            throw BudgetExceeded("polylog tail bound not reached within the term budget", 0.0, 0.0, m_split);
        m_split *= 2;
    }

    CompensatedSum<long double> re, im;
    long double weighted = 0.0L;
    for (long m = 1; m < m_split; ++m) {
        const long double phase = static_cast<long double>(m) * sl;
        const long double f = std::pow(static_cast<long double>(m), -static_cast<long double>(k));
        re.add(std::cos(phase) * f);
        im.add(std::sin(phase) * f);
        weighted += f * (phase + 4.0L);
    }
    cld tail(0.0L, 0.0L);
    cld denom = one_minus_w;
    for (int j = 0; j < p; ++j) {
        const long n = m_split + j;
        const long double phase = static_cast<long double>(n) * sl;
        tail += cld(std::cos(phase), std::sin(phase)) * backward_difference(k, n, j) / denom;
        denom *= one_minus_w;
    }
    const cld v = cld(re.value(), im.value()) + tail;
    const long double err = bound + LDBL_EPSILON * (weighted + 16.0L * std::abs(tail));
    return finish(v, err, m_split - 1 + p);
}

// zeta(k) = sum_{m<M} m^{-k} + M^{1-k}/(k-1) + M^{-k}/2
//           + sum_{j=1,2} B_{2j}/(2j)! (k)_{2j-1} M^{-k-2j+1} + O(M^{-k-5})
ComplexValue zeta_value(int k) {
    if (k < 2) throw DomainError("zeta_value needs k >= 2, got " + std::to_string(k));
    constexpr long kM = 1000;
    const long double M = kM;
    const long double kl = k;
    CompensatedSum<long double> sum;
    for (long m = kM - 1; m >= 1; --m) sum.add(std::pow(static_cast<long double>(m), -kl));
    sum.add(std::pow(M, 1.0L - kl) / (kl - 1.0L));
    sum.add(std::pow(M, -kl) / 2.0L);
    sum.add((1.0L / 6.0L) / 2.0L * rising(k, 1) * std::pow(M, -kl - 1.0L));
    sum.add((-1.0L / 30.0L) / 24.0L * rising(k, 3) * std::pow(M, -kl - 3.0L));
    const long double next = (1.0L / 42.0L) / 720.0L * rising(k, 5) * std::pow(M, -kl - 5.0L);
    const long double v = sum.value();
    return finish(cld(v, 0.0L), next + 8.0L * LDBL_EPSILON * v, kM + 3);
}

ComplexValue zeta3() { return zeta_value(3); }

// Direct sum to M, then the tail from H_{m-1} = log m + gamma - 1/(2m)
// - 1/(12 m^2) + O(m^{-4}) and Euler-Maclaurin through the h' term.
ComplexValue mzv_1_2n(int n, const SeriesConfig& config) {
    config.validate();
    if (n < 1) throw DomainError("mzv_1_2n needs n >= 1, got " + std::to_string(n));
    const long double a = 2.0L * n;

    long m_split = 1024;
    long double remainder = 0.0L;
    for (;;) {
        const long double M = static_cast<long double>(m_split);
        const long double scale = std::pow(M, -a - 3.0L);
        remainder = std::pow(a + 3.0L, 3.0L) * (std::log(M) + 2.0L) * scale / 720.0L + scale / 120.0L;
        if (2.0L * remainder < static_cast<long double>(config.tail_tolerance)) break;
        if (m_split > config.max_terms)
            throw BudgetExceeded("mzv tail bound not reached within the term budget", 0.0, 0.0, m_split);
        m_split *= 2;
    }

    CompensatedSum<long double> harmonic, sum;
    harmonic.add(1.0L);  // H_1
    for (long m = 2; m <= m_split; ++m) {
        sum.add(harmonic.value() / std::pow(static_cast<long double>(m), a));
        harmonic.add(1.0L / static_cast<long double>(m));
    }

    const long double M = static_cast<long double>(m_split);
    const long double L = std::log(M);
    auto h = [&](long double x) {
        return (std::log(x) + kEulerGamma) * std::pow(x, -a) - std::pow(x, -a - 1.0L) / 2.0L -
               std::pow(x, -a - 2.0L) / 12.0L;
    };
    const long double h_prime = std::pow(M, -a - 1.0L) * (1.0L - a * (L + kEulerGamma)) +
                                (a + 1.0L) / 2.0L * std::pow(M, -a - 2.0L) +
                                (a + 2.0L) / 12.0L * std::pow(M, -a - 3.0L);
    const long double integral = std::pow(M, 1.0L - a) * ((L + kEulerGamma) / (a - 1.0L) + 1.0L / ((a - 1.0L) * (a - 1.0L))) -
                                 std::pow(M, -a) / (2.0L * a) - std::pow(M, -a - 1.0L) / (12.0L * (a + 1.0L));
    sum.add(integral - h(M) / 2.0L - h_prime / 12.0L);

    const long double v = sum.value();
    const long double err = 2.0L * remainder + LDBL_EPSILON * v * (L + 8.0L);
    return finish(cld(v, 0.0L), err, m_split - 1);
}

std::vector<double> mzv_1_2n_partial_sums(int n, int count) {
    if (n < 1) throw DomainError("mzv_1_2n needs n >= 1");
    std::vector<double> out;
    const long double a = 2.0L * n;
    long double harmonic = 1.0L;
    long double sum = 0.0L;
    for (long m = 2; m < count + 2; ++m) {
        sum += harmonic / std::pow(static_cast<long double>(m), a);
        harmonic += 1.0L / static_cast<long double>(m);
        out.push_back(static_cast<double>(sum));
    }
    return out;
}

}  // namespace logsine
