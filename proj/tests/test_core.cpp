#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trispec/continuation.hpp"
#include "trispec/regions.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/taylor.hpp"
#include "trispec/tridiagonal.hpp"
#include "trispec/window.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace trispec;

TEST_CASE("rational and complex parsing") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("0.05") == Rational(1, 20));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational(" 6 / 4 ") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1e"), Error);
    CHECK_THROWS_AS(parse_rational("1e+"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(to_string(Rational(-1, 1215)) == "-1/1215");

    CHECK(parse_complex("1.5-2i") == Complex(1.5, -2));
    CHECK(parse_complex("0.3") == Complex(0.3, 0));
    CHECK(parse_complex("2i") == Complex(0, 2));
    CHECK(parse_complex("[0.25,-1]") == Complex(0.25, -1));
    const Complex w(0.1, -1.0 / 3.0);
    CHECK(parse_complex(format_complex(w)) == w);
    CHECK(parse_rational(format_double(0.1)) == Rational(1, 10));
}

TEST_CASE("power family couplings") {
    const auto mathieu = OperatorFamily::power(Rational(0));
    for (int k = 1; k <= 5; ++k) {
        CHECK(mathieu.b(k) == Complex(1.0));
        CHECK(mathieu.c(k) == Complex(1.0));
    }
    const auto jc = OperatorFamily::power(Rational(1, 2));
    CHECK(jc.b(2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(jc.b(4).real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(*jc.exact_coupling(7) == Rational(7));
    CHECK(jc.growth_M() == 1.0);
    CHECK(jc.growth_alpha() == 0.5);
    CHECK_THROWS_AS(OperatorFamily::power(Rational(2)), Error);

    const auto wh = OperatorFamily::whittaker_hill(Rational(2), Parity::Even);
    CHECK(wh.b(3) == Complex(-1.0));
    CHECK(wh.c(3) == Complex(5.0));
    CHECK(wh.growth_M() == 3.0);
    CHECK(wh.growth_alpha() == 1.0);
    for (int k = 1; k <= 10000; ++k) {
        REQUIRE(std::abs(wh.b(k)) <= wh.growth_M() * k);
        REQUIRE(std::abs(wh.c(k)) <= wh.growth_M() * k);
    }
}

TEST_CASE("custom certificate is spot-checked") {
    CustomSequences ok;
    ok.b = [](int k) { return Complex(std::sqrt(2.0 * k)); };
    ok.c = ok.b;
    CHECK_NOTHROW(OperatorFamily::custom(ok, std::sqrt(2.0), 0.5));
    CHECK_THROWS_AS(OperatorFamily::custom(ok, 1.0, 0.5), Error);

    CustomSequences bad_q;
    bad_q.q_table = {1, 4, 3};
    bad_q.b_table = {1, 1, 1};
    bad_q.c_table = {1, 1, 1};
    CHECK_THROWS_AS(OperatorFamily::custom(bad_q, 1.0, 0.0), Error);
}

TEST_CASE("truncation entries") {
    const auto m0 = truncate(OperatorFamily::power(Rational(0)), 0.0, 3);
    CHECK(m0.diag(0) == Complex(1));
    CHECK(m0.diag(2) == Complex(9));
    CHECK(m0.super.cwiseAbs().maxCoeff() == 0.0);

    const auto m1 = truncate(OperatorFamily::power(Rational(1, 2)), 1.0, 2);
    const Eigen::MatrixXcd d = m1.dense();
    CHECK(d(0, 0) == Complex(1));
    CHECK(d(0, 1) == Complex(1));
    CHECK(d(1, 0) == Complex(1));
    CHECK(d(1, 1) == Complex(4));

    const auto m2 = truncate(OperatorFamily::whittaker_hill(Rational(0), Parity::Even), Complex(0, 1), 2);
    CHECK(m2.super(0) == Complex(0, -1));
    CHECK(m2.sub(0) == Complex(0, 1));
}

TEST_CASE("localization radii and regions") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    for (int n = 1; n <= 50; ++n) CHECK(regions(jc, n).R_n == doctest::Approx(std::sqrt(double(n)) / 8).epsilon(1e-15));
    const Regions r3 = regions(jc, 3);
    CHECK(region_contains(r3, 9.0, Region::K));
    CHECK(region_contains(r3, 0.0, Region::Delta));
    const Regions r5 = regions(jc, 5);
    CHECK(region_contains(r5, 30.0, Region::H));
    CHECK_FALSE(region_contains(r5, 30.0, Region::K));
    for (int n = 1; n < 40; ++n) CHECK(regions(jc, n).R_n <= regions(jc, n + 1).R_n);
}

TEST_CASE("resolvent norm bound") {
    const auto m0 = OperatorFamily::power(Rational(0));
    CHECK(resolvent_norm_bound(m0, 10, 110.0) == doctest::Approx(0.4));
    const auto jc = OperatorFamily::power(Rational(1, 2));
    CHECK(resolvent_norm_bound(jc, 4, 12.0) == doctest::Approx(2.0));
    for (int n : {3, 7, 15})
        for (int i = 0; i < 24; ++i) {
            const Complex lam = double(n) * n + std::polar(n * (1 + 1e-9), 2 * M_PI * (i + 0.5) / 24);
            CHECK(coupling_resolvent_sup(jc, lam, 10000) <= resolvent_norm_bound(jc, n, lam) * (1 + 1e-12));
        }
}

TEST_CASE("complex symmetric tridiagonal QL agrees with a dense solver") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 5; ++trial) {
        const int N = 30;
        Eigen::VectorXcd d(N), e(N - 1);
        for (int k = 0; k < N; ++k) d(k) = Complex(g(rng), g(rng));
        for (int k = 0; k < N - 1; ++k) e(k) = Complex(g(rng), g(rng));
        Eigen::VectorXcd ql = complex_symmetric_tridiagonal_eigenvalues(d, e);
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
        for (int k = 0; k < N; ++k) A(k, k) = d(k);
        for (int k = 0; k < N - 1; ++k) A(k, k + 1) = A(k + 1, k) = e(k);
        Eigen::VectorXcd dense = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(A, false).eigenvalues();
        CHECK(multiset_matching_distance(ql, dense) < 1e-10);
    }
}

TEST_CASE("spectrum of the truncation") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const SpectrumResult s0 = spectrum(truncate(jc, 0.0, 5));
    for (int k = 0; k < 5; ++k) CHECK(s0.eigenvalues(k) == Complex(double(k + 1) * (k + 1)));

    const auto m0 = OperatorFamily::power(Rational(0));
    const SpectrumResult real = spectrum(truncate(m0, 0.7, 50));
    CHECK(real.eigenvalues.size() == 50);
    CHECK(real.eigenvalues.imag().cwiseAbs().maxCoeff() < 1e-10);
    CHECK(real.residuals.maxCoeff() <= 1e-10);

    // eigenvalue nearest 1 against 1 + a_2 z^2 + a_4 z^4, remainder O(z^6)
    const Eigen::VectorXcd ev = eigenvalues(jc, 0.5, 200);
    Complex nearest = ev(0);
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i) - 1.0) < std::abs(nearest - 1.0)) nearest = ev(i);
    const double series = 1.0 - 0.25 / 3.0 + 0.0625 / 108.0;
    CHECK(std::abs(nearest - series) < 2 * std::pow(0.5, 6) / 1215.0);
}

TEST_CASE("window eigenvalues") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const Eigen::VectorXcd w0 = window_eigenvalues(jc, 0.0, 4);
    REQUIRE(w0.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(w0(k) - double(k + 1) * (k + 1)) < 1e-12);

    const double R6 = regions(jc, 6).R_n;
    const Eigen::VectorXcd w6 = window_eigenvalues(jc, R6, 6);
    CHECK(w6.size() == 6);
    for (int k = 0; k < 6; ++k) CHECK(region_contains(regions(jc, 6), w6(k), Region::W));

    const auto m0 = OperatorFamily::power(Rational(0));
    const Eigen::VectorXcd w4 = window_eigenvalues(m0, Complex(0, 0.4), 4);
    CHECK(w4.size() == 4);
    CHECK(w4.imag().cwiseAbs().maxCoeff() < 4);

    CHECK_THROWS_AS(window_eigenvalues(jc, 1.0, 2), Error);
}

TEST_CASE("power sums") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    CHECK(std::abs(power_sum_sigma(jc, 0.0, 1, 3, SigmaMethod::Eig) - 14.0) < 1e-12);
    CHECK(std::abs(power_sum_sigma(jc, 0.0, 2, 3, SigmaMethod::Eig) - 98.0) < 1e-12);
    CHECK(std::abs(power_sum_sigma(jc, 0.0, 2, 3, SigmaMethod::Contour) - 98.0) < 1e-8);
    const Complex a = power_sum_sigma(jc, 0.3, 1, 4, SigmaMethod::Eig);
    const Complex b = power_sum_sigma(jc, 0.3, 1, 4, SigmaMethod::Contour);
    CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("continuation") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const EigenBranch still = continue_branch(jc, 3, PathInC({0.0}, false));
    CHECK(still.final_value() == Complex(9.0));

    const EigenBranch radial = continue_branch(jc, 3, PathInC::segment(0.0, 0.5));
    const TaylorSeries ts = solve_branch_equation(jc, 3, 6);
    // 0.5 lies outside Delta_3, where the a-priori tail bound is infinite; the
    // coefficients decay fast enough that six terms leave < 1e-10
    CHECK_THROWS_AS((void)ts.tail_bound(0.5, 7), Error);
    CHECK(std::abs(radial.final_value() - ts.partial_sum(0.5)) < 1e-10);
    for (size_t i = 0; i + 1 < radial.samples.size(); ++i)
        CHECK(std::abs(radial.samples[i + 1].second - radial.samples[i].second) < 1.0);

    const EigenBranch back = continue_branch(jc, 3, PathInC({0.0, 0.5, 0.0}, true));
    CHECK(std::abs(back.final_value() - 9.0) < 1e-9);

    // branch_deviation inside and outside Delta_n agrees with the series
    for (double z : {0.1, 0.5}) {
        const Complex d = branch_deviation(jc, 3, z);
        CHECK(std::abs(9.0 + d - ts.partial_sum(z)) < 1e-6);
    }
}
