#include "logsine/verification.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <string>

#include "logsine/errors.hpp"
#include "logsine/lehmer.hpp"
#include "logsine/polybernoulli.hpp"
#include "logsine/special.hpp"

namespace logsine {

namespace {

using Reports = std::vector<EvalReport>;

void append(Reports& into, Reports more) {
    for (auto& r : more) into.push_back(std::move(r));
}

std::string coefficient_list(const IntPolynomial& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i > 0) out += ", ";
        out += p.coefficients()[i].get_str();
    }
    return out + "]";
}

// p_{-1}..p_3 against the values listed with the recurrence.
Reports lehmer_listed_polynomials() {
    const std::vector<IntPolynomial> listed{
        IntPolynomial{},
        IntPolynomial{BigInt(1)},
        IntPolynomial{BigInt(3)},
        IntPolynomial{BigInt(7), BigInt(8)},
        IntPolynomial{BigInt(15), BigInt(70), BigInt(20)},
    };
    Reports out;
    for (int n = -1; n <= 3; ++n) {
        Stopwatch sw;
        const IntPolynomial& want = listed[static_cast<std::size_t>(n + 1)];
        const IntPolynomial got = lehmer_pair(n).p;
        EvalReport r;
        r.identity_id = "lehmer_p[n=" + std::to_string(n) + "]";
        r.lhs = coefficient_list(got);
        r.rhs = coefficient_list(want);
        r.exact = true;
        r.pass = got == want;
        r.abs_diff = r.pass ? 0.0 : 1.0;
        r.runtime_ms = sw.elapsed_ms();
        out.push_back(std::move(r));
    }
    return out;
}

// zeta_CB - (sigma/pi) eta_CB at s = -n has no arcsin part and reduces to
// sls_closed.
Reports elimination_checks(int n_max, const std::vector<Rational>& x_grid) {
    Reports out;
    for (int n = 0; n <= n_max; ++n) {
        for (const Rational& x : x_grid) {
            Stopwatch sw;
            const ClosedFormValue combined = sls_from_closed_forms(n, x);
            EvalReport r = make_exact_report("elimination[n=" + std::to_string(n) + ",x=" + x.to_string() + "]",
                                             combined.rational_part, sls_closed(n, x));
            if (!combined.arcsin_part.is_zero()) {
                r.pass = false;
                r.lhs += " + (" + combined.arcsin_part.to_string() + ") z asin(z)/sqrt(1-z^2)";
            }
            r.runtime_ms = sw.elapsed_ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

EvalReport series_vs_value(std::string id, const ComplexValue& v, double expected, double tolerance) {
    EvalReport r = make_numeric_report(std::move(id), v.re, expected, tolerance);
    return r;
}

Reports lehmer_series_checks(const SeriesConfig& series) {
    Reports out;
    for (int n = 0; n <= 6; ++n) {
        for (const double z : {0.3, 0.5, 0.7}) {
            const std::string tag = "[n=" + std::to_string(n) + ",z=" + format_real(z) + "]";
            const Rational zr = Rational::from_double(z);
            Stopwatch sw;
            EvalReport zr_report = series_vs_value("lehmer_zeta_cb" + tag, zeta_cb_series(-n, z, series),
                                                   static_cast<double>(zeta_cb_closed(n, zr).evaluate()), 1e-9);
            zr_report.runtime_ms = sw.elapsed_ms();
            out.push_back(std::move(zr_report));
            Stopwatch sw2;
            EvalReport er_report = series_vs_value("lehmer_eta_cb" + tag, eta_cb_series(-n, z, series),
                                                   static_cast<double>(eta_cb_closed(n, zr).evaluate()), 1e-9);
            er_report.runtime_ms = sw2.elapsed_ms();
            out.push_back(std::move(er_report));
        }
    }
    return out;
}

// zeta_CB(1; z) = 2 z asin(z) / sqrt(1 - z^2), eta_CB(1; z) = pi z / sqrt(1 - z^2).
Reports expansion_checks(const SeriesConfig& series) {
    Reports out;
    for (const double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const long double zl = z;
        const long double root = std::sqrt(1.0L - zl * zl);
        Stopwatch sw;
        EvalReport a = series_vs_value("arcsin_expansion[z=" + format_real(z) + "]", zeta_cb_series(1.0, z, series),
                                       static_cast<double>(2.0L * zl * std::asin(zl) / root), 1e-11);
        a.runtime_ms = sw.elapsed_ms();
        out.push_back(std::move(a));
        Stopwatch sw2;
        EvalReport b = series_vs_value("half_integer_expansion[z=" + format_real(z) + "]",
                                       eta_cb_series(1.0, z, series), static_cast<double>(kPiL * zl / root), 1e-11);
        b.runtime_ms = sw2.elapsed_ms();
        out.push_back(std::move(b));
    }
    return out;
}

Reports boundary_checks(const SeriesConfig& series) {
    Reports out;
    for (const int d : {6, 3, 2}) {
        Stopwatch sw;
        const ComplexValue v = sls_continued(1.0, kPi / d, series);
        EvalReport r = make_numeric_report("sls_at_one[sigma=pi/" + std::to_string(d) + "]", v.re, 0.0, v.abs_err);
        r.runtime_ms = sw.elapsed_ms();
        out.push_back(std::move(r));
    }
    return out;
}

const std::vector<double> kQuadS{2.0, 2.5, 3.0, 4.0};
const std::vector<std::pair<std::string, double>> kQuadSigma{
    {"pi/6", kPi / 6}, {"pi/3", kPi / 3}, {"pi/2", kPi / 2}};

std::string grid_tag(double s, const std::string& sigma) { return "[s=" + format_real(s) + ",sigma=" + sigma + "]"; }

Reports continuation_checks(const SeriesConfig& series, const QuadConfig& quad) {
    Reports out;
    for (const double s : kQuadS) {
        for (const auto& [name, sigma] : kQuadSigma) {
            Stopwatch sw;
            EvalReport r = make_numeric_report("sls_continuation" + grid_tag(s, name), sls_integral(s, sigma, quad).value,
                                               sls_continued(s, sigma, series).re, 1e-7);
            r.runtime_ms = sw.elapsed_ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

Reports integral_form_checks(const SeriesConfig& series, const QuadConfig& quad) {
    Reports out;
    for (const double s : kQuadS) {
        for (const auto& [name, sigma] : kQuadSigma) {
            const double z = std::sin(sigma / 2.0);
            Stopwatch sw;
            EvalReport a = make_numeric_report("zeta_cb_integral" + grid_tag(s, name), zcb_integral(s, sigma, quad).value,
                                               zeta_cb_series(s, z, series).re, 1e-7);
            a.runtime_ms = sw.elapsed_ms();
            out.push_back(std::move(a));
            Stopwatch sw2;
            EvalReport b = make_numeric_report("eta_cb_integral" + grid_tag(s, name), ecb_integral(s, sigma, quad).value,
                                               eta_cb_series(s, z, series).re, 1e-7);
            b.runtime_ms = sw2.elapsed_ms();
            out.push_back(std::move(b));
        }
    }
    return out;
}

// SLs(2; sigma) = -sigma^2/2 and
// SLs(3; sigma) = -2 (zeta(3) - Re Li_3(e^{i sigma}) + sigma^2/2 log(2 sin(sigma/2))).
Reports integer_value_checks(const SeriesConfig& series, const QuadConfig& quad) {
    Reports out;
    const std::vector<std::pair<std::string, double>> s2_grid{
        {"0.1", 0.1}, {"1.2", 1.2}, {"pi/2", kPi / 2}, {"3", 3.0}};
    for (const auto& [name, sigma] : s2_grid) {
        Stopwatch sw;
        EvalReport r = make_numeric_report("sls_two" + grid_tag(2.0, name), sls_integral(2.0, sigma, quad).value,
                                           -sigma * sigma / 2.0, 1e-9);
        r.runtime_ms = sw.elapsed_ms();
        out.push_back(std::move(r));
    }
    const double z3 = zeta3().re;
    for (const auto& [name, sigma] : std::vector<std::pair<std::string, double>>{{"pi/3", kPi / 3}, {"pi/2", kPi / 2}}) {
        Stopwatch sw;
        const double li3 = polylog_unit_circle(3, sigma, series).re;
        const double expected = -2.0 * (z3 - li3 + sigma * sigma / 2.0 * std::log(2.0 * std::sin(sigma / 2.0)));
        EvalReport r =
            make_numeric_report("sls_three" + grid_tag(3.0, name), sls_integral(3.0, sigma, quad).value, expected, 1e-7);
        r.runtime_ms = sw.elapsed_ms();
        out.push_back(std::move(r));
    }
    return out;
}

Reports historical_checks(const QuadConfig& quad) {
    Reports out;
    out.push_back(euler_identity_check(quad, 1e-9));
    for (const double x : {1.0, kPi / 2, kPi}) out.push_back(clausen_identity_check(x, quad, 1e-8));
    out.push_back(yujobo_identity_check(1, YujoboKind::odd_zeta, quad, 1e-6));
    out.push_back(yujobo_identity_check(1, YujoboKind::mzv, quad, 1e-6));
    out.push_back(yujobo_identity_check(2, YujoboKind::odd_zeta, quad, 1e-7));
    return out;
}

}  // namespace

Reports verify_main_theorem_exact(int n_max) {
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    const std::vector<Rational> sums = antidiagonal_sums(n_max);
    const Rational quarter(1, 4);
    Reports out;
    for (int n = 0; n <= n_max; ++n) {
        Stopwatch sw;
        EvalReport r = make_exact_report("main_theorem_exact[n=" + std::to_string(n) + "]", sls_closed(n, quarter),
                                         sums[static_cast<std::size_t>(n)] / Rational(3));
        r.runtime_ms = sw.elapsed_ms();
        out.push_back(std::move(r));
    }
    return out;
}

Reports verify_main_theorem_general(int n_max, const std::vector<Rational>& x_grid, const SeriesConfig& series) {
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    for (const Rational& x : x_grid)
        if (x <= Rational(0) || x > Rational(9, 10))
            throw DomainError("grid points must lie in (0, 0.9], got " + x.to_string());
    Reports out;
    for (int n = 0; n <= n_max; ++n) {
        for (const Rational& x : x_grid) {
            Stopwatch sw;
            const ComplexValue v = sls_continued_from_z(-n, std::sqrt(x.to_long_double()), series);
            EvalReport r = make_numeric_report("main_theorem_general[n=" + std::to_string(n) + ",x=" + x.to_string() + "]",
                                               sls_closed(n, x).to_double(), v.re, v.abs_err + 1e-10);
            r.runtime_ms = sw.elapsed_ms();
            out.push_back(std::move(r));
        }
    }
    return out;
}

Reports run_full_suite(const SuiteConfig& config) {
    config.series.validate();
    config.quad.validate();
    Reports out;
    if (config.selection.exact) {
        append(out, verify_main_theorem_exact(config.n_max_exact));
        append(out, lehmer_listed_polynomials());
        append(out, elimination_checks(config.n_max_series, config.x_grid));
    }
    if (config.selection.series) {
        append(out, verify_main_theorem_general(config.n_max_series, config.x_grid, config.series));
        append(out, lehmer_series_checks(config.series));
        for (const double z : {0.5, 0.9}) append(out, eta_generating_check(z, 6, 1e-8));
        append(out, expansion_checks(config.series));
        append(out, boundary_checks(config.series));
    }
    if (config.selection.quad) {
        const SeriesConfig& series = config.series;
        const QuadConfig& quad = config.quad;
        std::vector<std::function<Reports()>> groups{
            [&] { return continuation_checks(series, quad); },
            [&] { return integral_form_checks(series, quad); },
            [&] { return integer_value_checks(series, quad); },
            [&] { return historical_checks(quad); },
        };
        std::vector<std::future<Reports>> pending;
        for (auto& g : groups) pending.push_back(std::async(std::launch::async, g));
        for (auto& f : pending) append(out, f.get());
    }
    return out;
}

}  // namespace logsine
