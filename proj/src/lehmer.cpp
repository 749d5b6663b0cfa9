#include "logsine/lehmer.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "logsine/errors.hpp"
#include "logsine/special.hpp"

namespace logsine {

namespace {

// Memo of (p_n, q_n); slot i holds n = i - 1.
class LehmerTable {
public:
    LehmerPair get(int n) {
        const auto idx = static_cast<std::size_t>(n + 1);
        {
            std::shared_lock lock(mutex_);
            if (idx < pairs_.size()) return pairs_[idx];
        }
        std::unique_lock lock(mutex_);
        if (pairs_.empty()) pairs_.push_back({-1, IntPolynomial{}, IntPolynomial{BigInt(1)}});
        const IntPolynomial two_x_one_minus_x{BigInt(0), BigInt(2), BigInt(-2)};
        while (pairs_.size() <= idx) {
            const LehmerPair& cur = pairs_.back();
            const int m = cur.n;
            // 2(mx+1) and 2(m+1)x + 1
            const IntPolynomial p_factor{BigInt(2), BigInt(2 * m)};
            const IntPolynomial q_factor{BigInt(1), BigInt(2 * (m + 1))};
            LehmerPair next;
            next.n = m + 1;
            next.p = p_factor * cur.p + two_x_one_minus_x * cur.p.derivative() + cur.q;
            next.q = q_factor * cur.q + two_x_one_minus_x * cur.q.derivative();
            pairs_.push_back(std::move(next));
        }
        return pairs_[idx];
    }

private:
    std::shared_mutex mutex_;
    std::vector<LehmerPair> pairs_;
};

LehmerTable& table() {
    static LehmerTable t;
    return t;
}

void require_unit_interval(const Rational& v, const char* what) {
    if (v <= Rational(0) || v >= Rational(1))
        throw DomainError(std::string(what) + " must lie in (0, 1), got " + v.to_string());
}

void require_lehmer_index(int n) {
    if (n < -1) throw DomainError("Lehmer index must be >= -1, got " + std::to_string(n));
}

// 1 / (2^n (1-x)^{n+1})
Rational lehmer_prefactor(int n, const Rational& x) {
    return (Rational(2).pow(n) * (Rational(1) - x).pow(n + 1)).pow(-1);
}

ClosedFormValue::Kind kind_of(const ClosedFormValue& v) {
    return v.arcsin_part.is_zero() && v.pi_part.is_zero() ? ClosedFormValue::Kind::rational
                                                          : ClosedFormValue::Kind::algebraic;
}

}  // namespace

LehmerPair lehmer_pair(int n) {
    require_lehmer_index(n);
    return table().get(n);
}

std::vector<std::string> lehmer_shape_violations(int n_max) {
    std::vector<std::string> out;
    for (int n = -1; n <= n_max; ++n) {
        const LehmerPair lp = lehmer_pair(n);
        if (n < 0) continue;
        for (const auto& c : lp.p.coefficients())
            if (sgn(c) < 0) out.push_back("p_" + std::to_string(n) + " has a negative coefficient");
        for (const auto& c : lp.q.coefficients())
            if (sgn(c) < 0) out.push_back("q_" + std::to_string(n) + " has a negative coefficient");
        if (n >= 1) {
            const int want_p = n - 1 > 0 ? n - 1 : 0;
            if (lp.p.degree() != want_p)
                out.push_back("deg p_" + std::to_string(n) + " = " + std::to_string(lp.p.degree()) +
                              ", expected " + std::to_string(want_p));
            if (lp.q.degree() != n)
                out.push_back("deg q_" + std::to_string(n) + " = " + std::to_string(lp.q.degree()) +
                              ", expected " + std::to_string(n));
        }
    }
    return out;
}

long double ClosedFormValue::evaluate() const {
    const long double x = z_squared.to_long_double();
    const long double z = std::sqrt(x);
    const long double root = std::sqrt(1.0L - x);
    long double v = rational_part.to_long_double();
    if (!arcsin_part.is_zero()) v += arcsin_part.to_long_double() * z * std::asin(z) / root;
    if (!pi_part.is_zero()) v += pi_part.to_long_double() * kPiL * z / root;
    return v;
}

ClosedFormValue zeta_cb_closed_sq(int n, const Rational& x) {
    require_lehmer_index(n);
    require_unit_interval(x, "z^2");
    const LehmerPair lp = lehmer_pair(n);
    const Rational pre = lehmer_prefactor(n, x);
    ClosedFormValue v;
    v.z_squared = x;
    v.rational_part = x * lp.p.evaluate(x) * pre;
    v.arcsin_part = lp.q.evaluate(x) * pre;
    v.kind = kind_of(v);
    return v;
}

ClosedFormValue zeta_cb_closed(int n, const Rational& z) {
    require_unit_interval(z, "z");
    return zeta_cb_closed_sq(n, z * z);
}

ClosedFormValue eta_cb_closed_sq(int n, const Rational& x) {
    require_lehmer_index(n);
    require_unit_interval(x, "z^2");
    const LehmerPair lp = lehmer_pair(n);
    ClosedFormValue v;
    v.z_squared = x;
    // (pi/2) z q_n / (2^n (1-x)^{n+3/2}) = [q_n pre / 2] * pi z / sqrt(1-x)
    v.pi_part = lp.q.evaluate(x) * lehmer_prefactor(n, x) / Rational(2);
    v.kind = kind_of(v);
    return v;
}

ClosedFormValue eta_cb_closed(int n, const Rational& z) {
    require_unit_interval(z, "z");
    return eta_cb_closed_sq(n, z * z);
}

long double zeta_cb_closed_value(int n, long double z) {
    require_lehmer_index(n);
    if (!(z > 0.0L && z < 1.0L)) throw DomainError("z must lie in (0, 1)");
    const LehmerPair lp = lehmer_pair(n);
    const long double x = z * z;
    const long double root = std::sqrt(1.0L - x);
    const long double pre = 1.0L / (std::ldexp(1.0L, n) * std::pow(1.0L - x, static_cast<long double>(n) + 1.5L));
    return z * pre * (z * root * lp.p.evaluate(x) + std::asin(z) * lp.q.evaluate(x));
}

long double eta_cb_closed_value(int n, long double z) {
    require_lehmer_index(n);
    if (!(z > 0.0L && z < 1.0L)) throw DomainError("z must lie in (0, 1)");
    const LehmerPair lp = lehmer_pair(n);
    const long double x = z * z;
    return kPiL / 2.0L * z * lp.q.evaluate(x) /
           (std::ldexp(1.0L, n) * std::pow(1.0L - x, static_cast<long double>(n) + 1.5L));
}

Rational sls_closed(int n, const Rational& x) {
    require_lehmer_index(n);
    require_unit_interval(x, "x");
    return x * lehmer_pair(n).p.evaluate(x) * lehmer_prefactor(n, x);
}

ClosedFormValue sls_from_closed_forms(int n, const Rational& x) {
    const ClosedFormValue zeta = zeta_cb_closed_sq(n, x);
    const ClosedFormValue eta = eta_cb_closed_sq(n, x);
    // (sigma/pi) * pi z / sqrt(1-x) = 2 * z asin(z) / sqrt(1-x)
    ClosedFormValue v;
    v.z_squared = x;
    v.rational_part = zeta.rational_part;
    v.arcsin_part = zeta.arcsin_part - Rational(2) * eta.pi_part;
    v.kind = kind_of(v);
    return v;
}

std::vector<EvalReport> eta_generating_check(double z, int order, double rel_tolerance) {
    if (!(z > 0.0 && z < 1.0)) throw DomainError("z must lie in (0, 1)");
    if (order < 0) throw DomainError("order must be >= 0");
    const auto n_terms = static_cast<std::size_t>(order) + 1;
    const long double zl = z;
    const long double z2 = zl * zl;

    // w(t) = 1 - z^2 e^t, e(t) = e^{t/2}
    std::vector<long double> w(n_terms), e(n_terms), g(n_terms), rhs(n_terms);
    long double fact = 1.0L;
    for (std::size_t i = 0; i < n_terms; ++i) {
        if (i > 0) fact *= static_cast<long double>(i);
        w[i] = (i == 0 ? 1.0L : 0.0L) - z2 / fact;
        e[i] = std::pow(0.5L, static_cast<long double>(i)) / fact;
    }
    // g = w^{-1/2} via n w_0 g_n = sum_{j=1}^{n} (alpha j - (n - j)) w_j g_{n-j}
    constexpr long double alpha = -0.5L;
    g[0] = 1.0L / std::sqrt(w[0]);
    for (std::size_t n = 1; n < n_terms; ++n) {
        long double acc = 0.0L;
        for (std::size_t j = 1; j <= n; ++j)
            acc += (alpha * static_cast<long double>(j) - static_cast<long double>(n - j)) * w[j] * g[n - j];
        g[n] = acc / (static_cast<long double>(n) * w[0]);
    }
    for (std::size_t n = 0; n < n_terms; ++n) {
        long double acc = 0.0L;
        for (std::size_t j = 0; j <= n; ++j) acc += e[j] * g[n - j];
        rhs[n] = kPiL * zl * acc;
    }

    std::vector<EvalReport> reports;
    fact = 1.0L;
    for (std::size_t n = 0; n < n_terms; ++n) {
        Stopwatch sw;
        if (n > 0) fact *= static_cast<long double>(n);
        const long double from_series = rhs[n] * fact;
        const long double closed = eta_cb_closed_value(static_cast<int>(n) - 1, zl);
        EvalReport r = make_numeric_report("eta_generating[z=" + format_real(z) + ",n=" + std::to_string(n) + "]",
                                           static_cast<double>(from_series), static_cast<double>(closed),
                                           rel_tolerance * std::abs(static_cast<double>(closed)));
        r.abs_diff = static_cast<double>(std::abs(from_series - closed));
        r.pass = r.abs_diff <= r.tolerance;
        r.runtime_ms = sw.elapsed_ms();
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace logsine
