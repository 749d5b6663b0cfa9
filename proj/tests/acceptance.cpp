// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "logsine/lehmer.hpp"
#include "logsine/polybernoulli.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/series.hpp"
#include "logsine/special.hpp"
#include "logsine/verification.hpp"

using namespace logsine;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Folds numeric comparisons into an outcome, tracking the worst ratio of
// difference to tolerance.
class Tally {
public:
    void check(double diff, double tol) {
        const bool ok = diff <= tol;
        pass_ = pass_ && ok;
        worst_diff_ = std::max(worst_diff_, diff);
        ++count_;
        if (!ok) ++failed_;
    }
    void check(bool ok) {
        pass_ = pass_ && ok;
        ++count_;
        if (!ok) ++failed_;
    }
    Outcome outcome() const {
        std::ostringstream os;
        os << count_ << " checks, " << failed_ << " failed";
        if (worst_diff_ > 0.0) os << ", max diff " << worst_diff_;
        return {pass_, os.str()};
    }

private:
    bool pass_ = true;
    int count_ = 0;
    int failed_ = 0;
    double worst_diff_ = 0.0;
};

const std::vector<double> kS{2.0, 2.5, 3.0, 4.0};
const std::vector<double> kSigma{kPi / 6, kPi / 3, kPi / 2};

Outcome main_theorem_exact() {
    Tally t;
    for (const auto& r : verify_main_theorem_exact(30)) t.check(r.pass && r.exact);
    return t.outcome();
}

Outcome listed_polynomials() {
    Tally t;
    t.check(lehmer_pair(-1).p == IntPolynomial{});
    t.check(lehmer_pair(0).p == IntPolynomial{BigInt(1)});
    t.check(lehmer_pair(1).p == IntPolynomial{BigInt(3)});
    t.check(lehmer_pair(2).p == IntPolynomial{BigInt(7), BigInt(8)});
    t.check(lehmer_pair(3).p == IntPolynomial{BigInt(15), BigInt(70), BigInt(20)});
    return t.outcome();
}

Outcome continuation() {
    Tally t;
    for (const double s : kS)
        for (const double sigma : kSigma) t.check(std::abs(sls_integral(s, sigma).value - sls_continued(s, sigma).re), 1e-7);
    return t.outcome();
}

Outcome integer_values() {
    Tally t;
    for (const double sigma : {0.1, 1.2, kPi / 2, 3.0})
        t.check(std::abs(sls_integral(2.0, sigma).value + sigma * sigma / 2.0), 1e-9);
    const double z3 = zeta3().re;
    for (const double sigma : {kPi / 3, kPi / 2}) {
        const double expected =
            -2.0 * (z3 - polylog_unit_circle(3, sigma).re + sigma * sigma / 2.0 * std::log(2.0 * std::sin(sigma / 2.0)));
        t.check(std::abs(sls_integral(3.0, sigma).value - expected), 1e-7);
    }
    return t.outcome();
}

Outcome integral_forms() {
    Tally t;
    for (const double s : kS) {
        for (const double sigma : kSigma) {
            const double z = std::sin(sigma / 2.0);
            t.check(std::abs(zcb_integral(s, sigma).value - zeta_cb_series(s, z).re), 1e-7);
            t.check(std::abs(ecb_integral(s, sigma).value - eta_cb_series(s, z).re), 1e-7);
        }
    }
    return t.outcome();
}

Outcome negative_integers() {
    Tally t;
    for (int n = 0; n <= 6; ++n) {
        for (const double z : {0.3, 0.5, 0.7}) {
            const Rational zr = Rational::from_double(z);
            t.check(std::abs(zeta_cb_series(-n, z).re - static_cast<double>(zeta_cb_closed(n, zr).evaluate())), 1e-9);
            t.check(std::abs(eta_cb_series(-n, z).re - static_cast<double>(eta_cb_closed(n, zr).evaluate())), 1e-9);
        }
    }
    return t.outcome();
}

Outcome historical() {
    Tally t;
    const auto fold = [&t](const EvalReport& r) { t.check(r.abs_diff, r.tolerance); };
    fold(euler_identity_check({}, 1e-9));
    for (const double x : {1.0, kPi / 2, kPi}) fold(clausen_identity_check(x, {}, 1e-8));
    fold(yujobo_identity_check(1, YujoboKind::odd_zeta, {}, 1e-6));
    fold(yujobo_identity_check(1, YujoboKind::mzv, {}, 1e-6));
    fold(yujobo_identity_check(2, YujoboKind::odd_zeta, {}, 1e-7));
    return t.outcome();
}

Outcome generating_function() {
    Tally t;
    for (const double z : {0.5, 0.9})
        for (const auto& r : eta_generating_check(z, 6, 1e-8)) t.check(r.abs_diff, r.tolerance);
    return t.outcome();
}

Outcome boundary() {
    Tally t;
    for (const double sigma : kSigma) {
        const ComplexValue v = sls_continued(1.0, sigma);
        t.check(std::abs(v.re), v.abs_err);
    }
    return t.outcome();
}

struct Criterion {
    int id;
    const char* name;
    double budget_ms;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "main theorem exact, n <= 30", 5000, main_theorem_exact},
        {2, "listed Lehmer polynomials p_-1..p_3", 1, listed_polynomials},
        {3, "integral vs continuation, 1e-7", 30000, continuation},
        {4, "SLs(2), SLs(3) closed values, 1e-9 / 1e-7", 20000, integer_values},
        {5, "integral forms of zeta_CB, eta_CB, 1e-7", 30000, integral_forms},
        {6, "Lehmer closed forms at s = -n, 1e-9", 10000, negative_integers},
        {7, "Euler, Clausen, Yujobo identities", 60000, historical},
        {8, "eta_CB generating function, rel 1e-8", 5000, generating_function},
        {9, "SLs(1; sigma) = 0 within abs_err", 2000, boundary},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Stopwatch sw;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const auto ms = sw.elapsed_ms();
        // Millisecond clock: a sub-millisecond run reads as 0.
        const bool in_time = static_cast<double>(ms) <= c.budget_ms;
        const bool pass = o.pass && in_time;
        all = all && pass;
        std::printf("%s criterion %d: %s (%s; %lld ms of %.0f ms)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), static_cast<long long>(ms), c.budget_ms);
    }
    return all ? 0 : 1;
}
