#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "logsine/errors.hpp"
#include "logsine/series.hpp"
#include "logsine/special.hpp"

using namespace logsine;

namespace {

constexpr double kZeta3 = 1.2020569031595943;
constexpr double kZeta5 = 1.0369277551433699;
constexpr double kCatalan = 0.91596559417721902;

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("central binomial series at s = 1") {
    const ComplexValue zc = zeta_cb_series(1.0, 0.5);
    CHECK(near(zc.re, 0.6045997880780726, 1e-14));
    const ComplexValue ec = eta_cb_series(1.0, 0.5);
    CHECK(near(ec.re, 1.8137993642342178, 1e-14));
    CHECK(zc.abs_err >= 0.0);
    CHECK(std::isfinite(zc.abs_err));
}

TEST_CASE("reference values") {
    const ComplexValue c = zeta_cb_series({2.0, 3.0}, 0.4);
    CHECK(near(c.re, 0.31017433675711913, 1e-13));
    CHECK(near(c.im, -0.014536268804697186, 1e-13));
    CHECK(c.abs_err < 1e-12);
    CHECK(near(zeta_cb_series(-2.0, 0.5).re, 2.0051108756423029, 1e-13));
    CHECK(near(eta_cb_series(0.0, 0.9).re, 17.069939624502662, 1e-12));
    CHECK(near(eta_cb_series(2.0, 0.5).re, kPi * kPi / 3.0, 1e-14));
}

TEST_CASE("doubling the budget changes the value by less than abs_err") {
    SeriesConfig small;
    small.max_terms = 500;
    SeriesConfig big;
    big.max_terms = 1000;
    const ComplexValue a = zeta_cb_series({2.0, 3.0}, 0.4, small);
    const ComplexValue b = zeta_cb_series({2.0, 3.0}, 0.4, big);
    CHECK(std::abs(a.value() - b.value()) <= a.abs_err);
}

TEST_CASE("real s gives a real value") {
    for (const double s : {-4.0, -1.0, 0.5, 2.0, 3.5}) {
        for (const double z : {0.1, 0.5, 0.9}) {
            const ComplexValue a = zeta_cb_series(s, z);
            const ComplexValue b = eta_cb_series(s, z);
            CHECK(std::abs(a.im) <= a.abs_err);
            CHECK(std::abs(b.im) <= b.abs_err);
        }
    }
}

TEST_CASE("term recurrence matches the direct log-gamma form") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick_m(1, 50);
    std::uniform_real_distribution<double> pick_s(-3.0, 3.0);
    std::uniform_real_distribution<double> pick_z(0.1, 0.9);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = pick_m(rng);
        const std::complex<double> s(pick_s(rng), pick_s(rng));
        const double z = pick_z(rng);
        const auto zt = zeta_cb_terms(s, z, m);
        const auto et = eta_cb_terms(s, z, m + 1);
        const long double lz = std::log(2.0L * z);
        // (2z)^{2m} / (C(2m, m) m^s)
        const long double log_zt = 2 * m * lz - (log_gamma(2.0L * m + 1) - 2 * log_gamma(m + 1.0L));
        const std::complex<double> direct_z =
            std::exp(std::complex<double>(static_cast<double>(log_zt)) - s * std::log(static_cast<double>(m)));
        CHECK(std::abs(zt[m - 1] - direct_z) <= 1e-13 * std::abs(direct_z));
        // (2z)^{2m+1} / (C(2m+1, m+1/2) (m+1/2)^s)
        const long double log_et = (2 * m + 1) * lz - (log_gamma(2.0L * m + 2) - 2 * log_gamma(m + 1.5L));
        const std::complex<double> direct_e =
            std::exp(std::complex<double>(static_cast<double>(log_et)) - s * std::log(m + 0.5));
        CHECK(std::abs(et[m] - direct_e) <= 1e-13 * std::abs(direct_e));
    }
}

TEST_CASE("arcsin and half-integer expansions") {
    for (const double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double root = std::sqrt(1.0 - z * z);
        CHECK(near(zeta_cb_series(1.0, z).re / 2.0, z * std::asin(z) / root, 1e-11));
        CHECK(near(eta_cb_series(1.0, z).re / 2.0, kPi * z / (2.0 * root), 1e-11));
    }
}

TEST_CASE("continued SLs") {
    const ComplexValue v = sls_continued(2.0, 1.0);
    CHECK(near(v.re, -0.5, 1e-12));
    for (const double sigma : {kPi / 6, kPi / 3, kPi / 2, 2.0}) {
        const ComplexValue zero = sls_continued(1.0, sigma);
        CHECK(std::abs(zero.re) <= zero.abs_err);
    }
    // (1/3)(2/3)^n p_n(1/4) with p_2(1/4) = 9
    CHECK(near(sls_continued(-2.0, kPi / 3).re, 4.0 / 3.0, 1e-12));
    CHECK(near(sls_continued_from_z(-2.0, 0.5L).re, 4.0 / 3.0, 1e-12));
    CHECK(near(sls_continued(3.0, kPi / 3).re, -1.6027425375461257, 1e-12));
}

TEST_CASE("domain and budget errors") {
    CHECK_THROWS_AS(zeta_cb_series(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(zeta_cb_series(1.0, 0.96), DomainError);
    CHECK_THROWS_AS(eta_cb_series(1.0, -0.1), DomainError);
    CHECK_THROWS_AS(sls_continued(1.0, kPi), DomainError);
    SeriesConfig bad;
    bad.max_terms = 0;
    CHECK_THROWS_AS(zeta_cb_series(1.0, 0.5, bad), DomainError);
    SeriesConfig tight;
    tight.max_terms = 5;
    try {
        zeta_cb_series(1.0, 0.9, tight);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.terms == 5);
        CHECK(e.partial_re > 0.0);
    }
    SeriesConfig wide;
    wide.z_cap = 0.99;
    CHECK_NOTHROW(eta_cb_series(2.0, 0.985, wide));
}

TEST_CASE("polylogarithm on the unit circle") {
    const ComplexValue a = polylog_unit_circle(2, kPi);
    CHECK(near(a.re, -kPi * kPi / 12.0, 1e-13));
    CHECK(std::abs(a.im) <= 1e-13);
    CHECK(near(polylog_unit_circle(3, kPi).re, -0.75 * kZeta3, 1e-13));
    const ComplexValue quarter = polylog_unit_circle(2, kPi / 2);
    CHECK(near(quarter.re, -kPi * kPi / 48.0, 1e-13));
    CHECK(near(quarter.im, kCatalan, 1e-13));
    CHECK(near(polylog_unit_circle(3, kPi / 3).re, kZeta3 / 3.0, 1e-13));
    CHECK(near(polylog_unit_circle(3, kPi / 2).re, -3.0 * kZeta3 / 32.0, 1e-13));
    CHECK(near(polylog_unit_circle(2, 1.0).im, 1.0139591323607685, 1e-13));
    CHECK_THROWS_AS(polylog_unit_circle(1, 1.0), DomainError);
    CHECK_THROWS_AS(polylog_unit_circle(2, 0.0), DomainError);
}

TEST_CASE("zeta values") {
    const ComplexValue z3 = zeta3();
    CHECK(near(z3.re, kZeta3, 1e-12));
    CHECK(z3.abs_err < 1e-12);
    CHECK(z3.re > 1.2);
    CHECK(z3.re < 1.21);
    CHECK(near(zeta_value(5).re, kZeta5, 1e-12));
    CHECK(near(zeta_value(2).re, kPi * kPi / 6.0, 1e-12));
    CHECK_THROWS_AS(zeta_value(1), DomainError);
}

TEST_CASE("double sum zeta(1, 2n)") {
    CHECK(near(mzv_1_2n(1).re, zeta3().re, 1e-7));
    CHECK(near(mzv_1_2n(1).re, kZeta3, 1e-10));
    const ComplexValue two = mzv_1_2n(2);
    CHECK(two.re > 0.0);
    CHECK(two.re < 0.1);
    CHECK(near(two.re, 0.096551159988614652, 1e-10));
    const auto partial = mzv_1_2n_partial_sums(1, 100);
    for (std::size_t i = 1; i < partial.size(); ++i) CHECK(partial[i] > partial[i - 1]);
    CHECK_THROWS_AS(mzv_1_2n(0), DomainError);
}
