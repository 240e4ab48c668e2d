#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trispec/asymptotics.hpp"
#include "trispec/regions.hpp"

#include <cmath>

using namespace trispec;

TEST_CASE("P_k at z = 1") {
    CHECK(std::abs(P_k(1, 1.0) - (-0.25)) < 1e-15);
    CHECK(std::abs(P_k(2, 1.0) - (-5.0 / 32)) < 1e-15);
    CHECK(std::abs(P_k(3, 1.0) - (-3.0 / 32)) < 1e-15);
    for (int k = 1; k <= 6; ++k) {
        CHECK(std::abs(P_k(k, 0.0)) == 0.0);
        CHECK(std::abs(P_k(k, 0.7) - P_k(k, -0.7)) < 1e-15);
    }
}

TEST_CASE("slope fit") {
    std::vector<std::pair<int, double>> s;
    for (int n : kSlopeGrid) s.emplace_back(n, 3.0 * std::pow(n, -4.5));
    const ResidualFit f = fit_slope("synthetic", s, -4.5, 0.01);
    CHECK(f.fitted_slope == doctest::Approx(-4.5).epsilon(1e-12));
    CHECK(f.fitted_intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(f.pass);
    CHECK_FALSE(fit_slope("off", s, -3.0, 0.35).pass);
    s[2].second = 0.0;
    CHECK_THROWS_AS((void)fit_slope("zero", s, -4.5), Error);
}

TEST_CASE("target exponents") {
    CHECK(thm2_target_slope(0.0) == -5.0);
    CHECK(thm2_target_slope(0.5) == -4.0);
    CHECK(thm2_target_slope(0.25) == -4.5);
}

TEST_CASE("residuals vanish at z = 0") {
    CHECK(thm4_residual(0.0, 10) < 1e-10);
    CHECK(thm2_residual(0.3, 0.0, 10) < 1e-10);
    CHECK(std::abs(thm2_bracket(0.5, 0.0, 7)) == 0.0);
}

TEST_CASE("fourth-order residual is of size n^-6") {
    const double r20 = thm4_residual(1.0, 20);
    CHECK(r20 < 10.0 * std::abs(P_k(3, 1.0)) / std::pow(20.0, 6));
    CHECK(thm4_residual(1.0, 40) < r20);
}

TEST_CASE("P_k recovered from eigenvalue data") {
    std::vector<int> ns;
    for (int n = 16; n <= 64; n += 4) ns.push_back(n);
    const auto fits = pk_expansion_check({0.0, 1.0, -1.0}, ns, 3);
    REQUIRE(fits.size() == 3);
    for (const Complex& c : fits[0].recovered) CHECK(std::abs(c) < 1e-9);
    CHECK(fits[1].pass);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(fits[1].recovered[k] - fits[2].recovered[k]) < 1e-6);
}

TEST_CASE("radius probe") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    double previous = 0.0;
    for (int n : {5, 10, 20}) {
        const RadiusProbe p = radius_probe(jc, n, 2, 8);
        CHECK(p.estimate >= regions(jc, n).R_n);
        CHECK(p.estimate > previous);
        previous = p.estimate;
    }
    const RadiusProbe m = radius_probe(OperatorFamily::power(Rational(0)), 6, 2, 8);
    CHECK(std::isfinite(m.estimate));
    CHECK(m.estimate > 0.0);
}

TEST_CASE("working n") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const int n = working_n_R(jc, 1.0);
    CHECK(n == 64);
    CHECK(regions(jc, n).R_n >= 1.0);
    CHECK(regions(jc, n - 1).R_n < 1.0);
}
