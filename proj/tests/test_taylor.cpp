#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trispec/closed_forms.hpp"
#include "trispec/taylor.hpp"
#include "trispec/walks.hpp"

#include <cmath>

using namespace trispec;

namespace {

Rational exact(const Coefficient& c) { return std::get<Rational>(c); }

} // namespace

TEST_CASE("walk enumeration") {
    CHECK(first_return_walks(1, 2).size() == 1);
    CHECK(first_return_walks(2, 2).size() == 2);
    // 2 -> 1 -> 2 returns early, so only the upward excursion is left
    CHECK(first_return_walks(2, 4).size() == 1);
    CHECK(first_return_walks(3, 4).size() == 2);
    CHECK(first_return_walks(10, 4).size() == 2);
    CHECK(first_return_walks(10, 6).size() == 4);
    CHECK(first_return_walks(4, 3).empty());
    for (const Walk& w : first_return_walks(3, 6)) {
        const auto v = w.vertices();
        CHECK(v.front() == 3);
        CHECK(v.back() == 3);
        for (size_t i = 1; i + 1 < v.size(); ++i) CHECK(v[i] != 3);
    }
}

TEST_CASE("branch equation at n = 1, alpha = 1/2") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const TaylorSeries ts = solve_branch_equation(jc, 1, 3, Backend::Exact);
    REQUIRE(ts.exact);
    CHECK(ts.exact_coefficient(1) == Rational(-1, 3));
    CHECK(ts.exact_coefficient(2) == Rational(1, 108));
    CHECK(ts.exact_coefficient(3) == Rational(-1, 1215));

    const TaylorSeries fl = solve_branch_equation(jc, 1, 3, Backend::Float);
    CHECK_FALSE(fl.exact);
    CHECK(fl.coefficient(3) == doctest::Approx(-1.0 / 1215).epsilon(1e-15));
}

TEST_CASE("odd orders vanish and the residual is zero") {
    const auto m0 = OperatorFamily::power(Rational(0));
    const auto st = solve_branch_state<Rational>(m0, 3, 9, false);
    for (int m = 1; m <= 9; m += 2) CHECK(st.zeta[m] == 0);
    for (const Rational& r : branch_equation_residual(st)) CHECK(r == 0);
    const auto fast = solve_branch_state<Rational>(m0, 3, 8, true);
    for (int m = 0; m <= 8; m += 2) CHECK(fast.zeta[m] == st.zeta[m]);
}

TEST_CASE("second-order closed forms") {
    CHECK(exact(closed_coefficient(Rational(0), 2, 2)) == Rational(2, 15));
    CHECK(exact(closed_coefficient(Rational(1, 2), 3, 2)) == Rational(-1, 35));
    CHECK(exact(closed_coefficient(Rational(0), 5, 2)) == Rational(2, 99));
    CHECK(exact(closed_coefficient(Rational(1, 2), 4, 3)) == 0);
    CHECK(exact(phi_closed(OperatorFamily::power(Rational(1, 2)), 2, 10)) == Rational(-10, 21));
    CHECK(exact(phi_closed(OperatorFamily::power(Rational(0)), 2, 1)) == Rational(-1, 3));
}

TEST_CASE("closed forms agree with the walk-sum solver") {
    for (const Rational& alpha : {Rational(0), Rational(1, 2)}) {
        const auto f = OperatorFamily::power(alpha);
        for (int n = 1; n <= 12; ++n) {
            const TaylorSeries ts = solve_branch_equation(f, n, 3, Backend::Exact);
            for (int k = 1; k <= 3; ++k)
                if (n >= closed_form_floor(2 * k, alpha == Rational(1, 2), ClosedForm::Auto))
                    CHECK(ts.exact_coefficient(k) == exact(closed_coefficient(alpha, n, 2 * k)));
        }
    }
}

TEST_CASE("telescoping of a_2 and a_4") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    Rational s2 = 0, s4 = 0;
    for (int n = 1; n <= 50; ++n) {
        const TaylorSeries ts = solve_branch_equation(jc, n, 2, Backend::Exact);
        s2 += ts.exact_coefficient(1);
        s4 += ts.exact_coefficient(2);
        if (n >= 2) {
            CHECK(s2 == exact(phi_closed(jc, 2, n)));
            CHECK(s4 == exact(phi_closed(jc, 4, n)));
        }
    }
}

TEST_CASE("phi by residues matches the closed expressions") {
    for (const Rational& alpha : {Rational(0), Rational(1, 2)}) {
        const auto f = OperatorFamily::power(alpha);
        for (int n = 1; n <= 8; ++n)
            for (int k : {2, 4})
                CHECK(exact(phi_by_residues(f, n, k, Backend::Exact)) == exact(phi_closed(f, k, n)));
    }
}

TEST_CASE("a6 differences of psi") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    CHECK(psi(1) == Rational(-1, 1215));
    for (int n = 2; n <= 20; ++n) {
        const TaylorSeries ts = solve_branch_equation(jc, n, 3, Backend::Exact);
        CHECK(ts.exact_coefficient(3) == psi(n) - psi(n - 1));
    }
}

TEST_CASE("coefficient bounds") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const auto [contour4, walk4] = coefficient_bounds(jc, 4, 2);
    CHECK(walk4 == doctest::Approx(64.0));
    CHECK(contour4 == doctest::Approx(2.0 * 5 * 16));
    const TaylorSeries ts = solve_branch_equation(jc, 4, 1, Backend::Exact);
    CHECK(ts.exact_coefficient(1) == Rational(-1, 63));

    const auto m0 = OperatorFamily::power(Rational(0));
    CHECK(coefficient_bounds(m0, 10, 4).first == doctest::Approx(2.0 * 9 * 256 / 1000.0));
    for (int n = 1; n <= 10; ++n) {
        const TaylorSeries s = solve_branch_equation(m0, n, 4, Backend::Exact);
        for (int k = 1; k <= 4; ++k) {
            const auto [c, w] = coefficient_bounds(m0, n, 2 * k);
            CHECK(std::abs(s.coefficient(k)) <= std::min(c, w));
        }
    }
}

TEST_CASE("tail bound") {
    CHECK(tail_bound(1.0, 0.5, 100, 0.0, 2) == 0.0);
    const double expected = std::pow(8.0, 4) / 100.0 / (1.0 - 64.0 / 100.0);
    CHECK(tail_bound(1.0, 0.5, 100, 1.0, 2) <= expected * (1 + 1e-12));
    CHECK(tail_bound(1.0, 0.5, 100, 1.0, 2) == doctest::Approx(expected));
    CHECK_THROWS_AS((void)tail_bound(1.0, 0.5, 100, 1.25, 2), Error);
}

TEST_CASE("backend resolution") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    CHECK(resolve_backend(jc, 4, Backend::Auto) == Backend::Exact);
    const auto irr = OperatorFamily::power(0.3);
    CHECK(resolve_backend(irr, 4, Backend::Auto) == Backend::Float);
    const TaylorSeries f = solve_branch_equation(irr, 2, 2);
    CHECK_FALSE(f.exact);
    CHECK(f.coefficient(1) == doctest::Approx(-std::pow(2.0, 0.6) / 5 + 1.0 / 3).epsilon(1e-14));
}
