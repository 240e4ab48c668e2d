#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trispec/regions.hpp"
#include "trispec/riemann.hpp"

#include <cmath>
#include <random>

using namespace trispec;

namespace {

void check_coeffs(const CharPolyAtZ& p, const std::vector<double>& expected, double tol) {
    REQUIRE(p.coeffs.size() == expected.size());
    for (size_t j = 0; j < expected.size(); ++j) CHECK(std::abs(p.coeffs[j] - expected[j]) < tol);
}

} // namespace

TEST_CASE("characteristic polynomial at z = 0") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    check_coeffs(char_poly(jc, 0.0, 2), {4, -5, 1}, 1e-12);
    check_coeffs(char_poly(jc, 0.0, 3), {-36, 49, -14, 1}, 1e-11);
    check_coeffs(char_poly(jc, 0.0, 3, CharPolyMethod::Newton), {-36, 49, -14, 1}, 1e-8);
}

TEST_CASE("product and Newton routes agree") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const CharPolyAtZ a = char_poly(jc, 0.4, 3, CharPolyMethod::Product);
    const CharPolyAtZ b = char_poly(jc, 0.4, 3, CharPolyMethod::Newton);
    REQUIRE(a.coeffs.size() == b.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) CHECK(std::abs(a.coeffs[j] - b.coeffs[j]) < 1e-9);
}

TEST_CASE("Newton identities") {
    // roots 1, 2, 3: p = 6, 14, 36; e = 1, 6, 11, 6
    const auto e = newton_identities({6.0, 14.0, 36.0});
    REQUIRE(e.size() == 4);
    CHECK(e[0] == 1.0);
    CHECK(std::abs(e[1] - 6.0) < 1e-12);
    CHECK(std::abs(e[2] - 11.0) < 1e-12);
    CHECK(std::abs(e[3] - 6.0) < 1e-12);
}

TEST_CASE("resultant") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    CHECK(std::abs(discriminant(char_poly(jc, 0.0, 2))) == doctest::Approx(9.0));
    CHECK(std::abs(sylvester_resultant({1.0, -2.0, 1.0})) < 1e-14);
    for (int n = 2; n <= 12; ++n) {
        const CharPolyAtZ p = char_poly(jc, 0.0, n);
        CHECK(std::abs(root_product_resultant(p.roots)) > 0.0);
        CHECK(std::abs(normalized_discriminant(jc, 0.0, n) - 1.0) < 1e-9);
    }

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 2; n <= 8; ++n) {
        const double R = regions(jc, n).R_n;
        for (int t = 0; t < 4; ++t) {
            Complex z(u(rng), u(rng));
            if (std::abs(z) >= 1.0) z /= 2 * std::abs(z);
            z *= R;
            const CharPolyAtZ p = char_poly(jc, z, n);
            const Complex s = sylvester_resultant(p.coeffs);
            const Complex r = root_product_resultant(p.roots);
            CHECK(std::abs(s - r) <= 1e-6 * std::abs(r));
        }
    }
}

TEST_CASE("branch point search near the origin is empty") {
    const auto m0 = OperatorFamily::power(Rational(0));
    BranchSearchOptions o;
    o.radius = 0.05;
    const BranchPointSet s = find_branch_points(m0, 4, o);
    CHECK(s.points.empty());
    CHECK(s.search_radius == 0.05);
    o.radius = 1.0;
    CHECK_THROWS_AS((void)find_branch_points(m0, 4, o), Error);
}

TEST_CASE("permutation helpers") {
    const std::vector<int> a{2, 1, 3}, b{1, 3, 2};
    CHECK(compose(a, b) == std::vector<int>{2, 3, 1});
    CHECK(compose(b, a) == std::vector<int>{3, 1, 2});
    CHECK(inverse(compose(a, b)) == compose(b, a));
    CHECK(is_identity(compose(a, a)));
    CHECK_FALSE(is_identity(a));
}

TEST_CASE("monodromy of trivial and empty loops") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const MonodromyResult still = monodromy(jc, PathInC({0.0}, true), 4);
    CHECK(is_identity(still.permutation));
    const MonodromyResult empty = monodromy(jc, PathInC::loop_around(0.0, 0.1, 0.05, 32), 4);
    CHECK(is_identity(empty.permutation));
    CHECK(empty.tail_fixed_beyond >= 1);
}

TEST_CASE("small loop around the first Mathieu-type branch point") {
    const auto m0 = OperatorFamily::power(Rational(0));
    const Complex z_star(0.0, 1.7322);
    const MonodromyResult m = monodromy(m0, PathInC::loop_around(0.0, z_star, 0.05, 48), 4);
    REQUIRE(m.permutation.size() >= 4);
    CHECK(m.permutation[0] == 2);
    CHECK(m.permutation[1] == 1);
    CHECK(m.permutation[2] == 3);
    CHECK(m.permutation[3] == 4);
}

TEST_CASE("irreducibility certificates") {
    const IrreducibilityReport k6 = irreducibility_certificate(OperatorFamily::power(Rational(1, 2)), 6, 50);
    CHECK(k6.values.at(0) == doctest::Approx(-1.0 / 1215));
    CHECK(k6.exceptional_index == 1);
    CHECK(k6.pattern_holds);
    CHECK(k6.telescoped_sum_check);
    CHECK(k6.verdict == Verdict::CertifiedIrreducible);

    const IrreducibilityReport k4 = irreducibility_certificate(OperatorFamily::power(Rational(1, 20)), 4, 50);
    CHECK(k4.verdict == Verdict::CertifiedIrreducible);
    for (int n = 3; n <= 50; ++n) CHECK(k4.values.at(n - 1) > 0.0);

    for (int i = 0; i <= 20; ++i) CHECK(a4_tilde(HighFloat(i) / 20, 2) < 0);
}

TEST_CASE("decreasing families") {
    CustomSequences inv_sqrt;
    inv_sqrt.b = [](int k) { return Complex(1.0 / std::sqrt(double(k))); };
    inv_sqrt.c = inv_sqrt.b;
    const auto r = decreasing_family_certificate(OperatorFamily::custom(inv_sqrt, 1.0, -0.5));
    CHECK(r.verdict == Verdict::CertifiedIrreducible);

    CustomSequences geometric;
    geometric.b = [](int k) { return Complex(std::ldexp(1.0, -k)); };
    geometric.c = geometric.b;
    const auto g = decreasing_family_certificate(OperatorFamily::custom(geometric, 1.0, -0.5));
    CHECK(g.values.at(0) == doctest::Approx(-0.25 / 3));
    for (int n = 2; n <= 40; ++n) {
        const double expected = std::ldexp(1.0, -2 * (n - 1)) / (2 * n - 1) - std::ldexp(1.0, -2 * n) / (2 * n + 1);
        CHECK(g.values.at(n - 1) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(g.values.at(n - 1) > 0.0);
    }

    try {
        (void)decreasing_family_certificate(OperatorFamily::power(Rational(0)));
        FAIL("expected NotMonotone");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMonotone);
    }
}
