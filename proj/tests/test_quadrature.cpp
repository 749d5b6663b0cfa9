#include <doctest.h>

#include <cmath>
#include <limits>

#include "logsine/errors.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/series.hpp"
#include "logsine/special.hpp"

using namespace logsine;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("tanh-sinh on endpoint singularities") {
    const IntegralResult log_int = tanh_sinh([](double, double l, double) { return std::log(l); }, 0.0, 1.0);
    CHECK(near(log_int.value, -1.0, 1e-12));
    const IntegralResult root = tanh_sinh([](double, double l, double) { return 1.0 / std::sqrt(l); }, 0.0, 1.0);
    CHECK(near(root.value, 2.0, 1e-9));
    const IntegralResult poly = tanh_sinh([](double x, double, double) { return x * x; }, -1.0, 2.0);
    CHECK(near(poly.value, 3.0, 1e-13));
    CHECK(poly.est_err >= 0.0);
    CHECK(poly.evaluations > 0);
}

TEST_CASE("tanh-sinh errors") {
    CHECK_THROWS_AS(tanh_sinh([](double, double, double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
                    NumericError);
    CHECK_THROWS_AS(tanh_sinh([](double, double, double) { return 1.0; }, 1.0, 1.0), DomainError);
    QuadConfig coarse;
    coarse.levels = 2;
    CHECK_THROWS_AS(tanh_sinh([](double, double, double) { return 1.0; }, 0.0, 1.0, coarse), DomainError);
}

TEST_CASE("SLs integral at s = 2 and s = 3") {
    CHECK(near(sls_integral(2.0, 1.2).value, -0.72, 1e-9));
    CHECK(near(sls_integral(2.0, 0.1).value, -0.005, 1e-10));
    CHECK(near(sls_integral(2.0, kPi).value, -kPi * kPi / 2.0, 1e-9));
    const double sigma = kPi / 2;
    const double expected =
        -2.0 * (zeta3().re - polylog_unit_circle(3, sigma).re + sigma * sigma / 2.0 * std::log(2.0 * std::sin(sigma / 2.0)));
    CHECK(near(sls_integral(3.0, sigma).value, expected, 1e-9));
    CHECK(near(sls_integral(2.5, kPi / 3).value, -0.98695010602533047, 1e-10));
}

TEST_CASE("integral forms of the central binomial series") {
    CHECK(near(zcb_integral(2.0, kPi / 3).value, zeta_cb_series(2.0, 0.5).re, 1e-8));
    CHECK(near(zcb_integral(3.0, kPi / 2).value, zeta_cb_series(3.0, std::sin(kPi / 4)).re, 1e-8));
    const double small = zcb_integral(2.0, 0.2).value;
    CHECK(small > 0.0);
    CHECK(near(small, zeta_cb_series(2.0, std::sin(0.1)).re, 1e-8));
    CHECK(near(ecb_integral(2.0, kPi / 3).value, eta_cb_series(2.0, 0.5).re, 1e-8));
    CHECK(near(ecb_integral(3.0, kPi / 3).value, eta_cb_series(3.0, 0.5).re, 1e-8));
    SeriesConfig wide;
    wide.z_cap = 0.99;
    CHECK(near(ecb_integral(2.0, 2.8).value, eta_cb_series(2.0, std::sin(1.4), wide).re, 1e-7));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(sls_integral(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(sls_integral(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(sls_integral(2.0, 3.2), DomainError);
    CHECK_THROWS_AS(zcb_integral(2.0, kPi), DomainError);
    CHECK_THROWS_AS(ecb_integral(0.5, 1.0), DomainError);
}

TEST_CASE("est_err does not grow with the level count") {
    for (const double s : {2.0, 2.5, 3.0}) {
        for (const double sigma : {0.5, kPi / 3, kPi / 2, 3.0}) {
            double previous = std::numeric_limits<double>::infinity();
            for (int levels = 3; levels <= 10; ++levels) {
                QuadConfig cfg;
                cfg.levels = levels;
                const IntegralResult r = sls_integral(s, sigma, cfg);
                CHECK(r.est_err >= 0.0);
                CHECK(r.est_err <= previous);
                previous = r.est_err;
            }
        }
    }
}

TEST_CASE("the SLs integrand splits into the zeta_CB and eta_CB integrands") {
    for (const double s : {2.0, 2.5, 3.0, 4.0}) {
        for (const double sigma : {kPi / 6, kPi / 3, kPi / 2}) {
            const double split = zcb_integral(s, sigma).value - sigma / kPi * ecb_integral(s, sigma).value;
            CHECK(near(sls_integral(s, sigma).value, split, 1e-9));
        }
    }
}

TEST_CASE("integral against continuation, s in {2, 3, 4}") {
    for (const double s : {2.0, 3.0, 4.0})
        for (const double sigma : {kPi / 6, kPi / 3, kPi / 2, 2.5})
            CHECK(near(sls_integral(s, sigma).value, sls_continued(s, sigma).re, 1e-7));
}

TEST_CASE("historical identities") {
    const EvalReport euler = euler_identity_check();
    CHECK(euler.pass);
    CHECK(std::stod(euler.lhs) == doctest::Approx(1.0517997902646450).epsilon(1e-14));
    const IntegralResult half = tanh_sinh([](double, double t, double) { return t * std::log(std::sin(t)); }, 0.0, kPi / 2);
    CHECK(half.value < 0.0);

    for (const double x : {1.0, kPi / 2, kPi, 4.0, 6.0}) CHECK(clausen_identity_check(x).pass);
    CHECK(std::abs(std::stod(clausen_identity_check(kPi).lhs)) < 1e-15);
    CHECK(std::stod(clausen_identity_check(kPi / 2).lhs) == doctest::Approx(0.91596559417721902).epsilon(1e-14));
    CHECK_THROWS_AS(clausen_identity_check(0.0), DomainError);

    const EvalReport odd1 = yujobo_identity_check(1, YujoboKind::odd_zeta);
    CHECK(odd1.pass);
    CHECK(odd1.abs_diff < 1e-7);
    const EvalReport mzv1 = yujobo_identity_check(1, YujoboKind::mzv, {}, 1e-6);
    CHECK(mzv1.pass);
    const EvalReport odd2 = yujobo_identity_check(2, YujoboKind::odd_zeta);
    CHECK(odd2.pass);
    CHECK(std::stod(odd2.lhs) == doctest::Approx(1.0369277551433699).epsilon(1e-12));
    CHECK(yujobo_identity_check(2, YujoboKind::mzv).pass);
    CHECK_THROWS_AS(yujobo_identity_check(0, YujoboKind::mzv), DomainError);
}
