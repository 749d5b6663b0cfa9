#include <doctest.h>

#include <string>

#include "logsine/errors.hpp"
#include "logsine/verification.hpp"

using namespace logsine;

TEST_CASE("main theorem, exact") {
    const auto reports = verify_main_theorem_exact(30);
    REQUIRE(reports.size() == 31);
    for (const auto& r : reports) {
        CHECK_MESSAGE(r.pass, r.identity_id);
        CHECK(r.exact);
        CHECK(r.lhs == r.rhs);
    }
    CHECK(reports[0].lhs == "1/3");
    CHECK(reports[1].lhs == "2/3");
    CHECK_THROWS_AS(verify_main_theorem_exact(-1), DomainError);
}

TEST_CASE("main theorem, general x") {
    const auto reports = verify_main_theorem_general(8, {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(9, 10)});
    CHECK(reports.size() == 36);
    for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.identity_id << " diff " << r.abs_diff);
    CHECK_THROWS_AS(verify_main_theorem_general(2, {Rational(19, 20)}), DomainError);
}

TEST_CASE("full suite") {
    const auto reports = run_full_suite();
    CHECK(all_pass(reports));
    for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.identity_id);
    REQUIRE(!reports.empty());
    // exact checks first, quadrature last
    CHECK(reports.front().identity_id.rfind("main_theorem_exact", 0) == 0);
    CHECK(reports.back().identity_id.rfind("yujobo", 0) == 0);
}

TEST_CASE("empty selection") {
    SuiteConfig cfg;
    cfg.selection = SuiteSelection::none();
    CHECK(run_full_suite(cfg).empty());
}

TEST_CASE("coarse quadrature still reports every check") {
    SuiteConfig fine;
    fine.selection = {false, false, true};
    SuiteConfig coarse = fine;
    coarse.quad.levels = 3;
    const auto a = run_full_suite(fine);
    const auto b = run_full_suite(coarse);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].identity_id == b[i].identity_id);
}

TEST_CASE("reports are deterministic") {
    const auto a = run_full_suite();
    const auto b = run_full_suite();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].identity_id == b[i].identity_id);
        CHECK(a[i].pass == b[i].pass);
        if (a[i].exact) {
            CHECK(a[i].lhs == b[i].lhs);
            CHECK(a[i].rhs == b[i].rhs);
        }
    }
}
