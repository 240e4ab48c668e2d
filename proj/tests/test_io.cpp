#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trispec/io.hpp"

using namespace trispec;

namespace {

Json custom_spec() {
    Json q = Json::array(), b = Json::array(), c = Json::array();
    for (int k = 1; k <= 30; ++k) {
        q.push_back(k * k);
        b.push_back("1/2");
        c.push_back("1/2");
    }
    return Json{{"kind", "custom"}, {"tables", {{"q", q}, {"b", b}, {"c", c}}}, {"M", 1}, {"alpha", 0}};
}

} // namespace

TEST_CASE("scalar parsing") {
    CHECK(rational_from_json(Json(0.1)) == Rational(1, 10));
    CHECK(rational_from_json(Json("3/4")) == Rational(3, 4));
    CHECK(rational_from_json(Json(2)) == Rational(2));
    CHECK(complex_from_json(Json::array({0.5, -2})) == Complex(0.5, -2));
    CHECK(complex_from_json(Json("1+2i")) == Complex(1, 2));
    CHECK(to_json(Complex(1, -1)) == Json::array({1.0, -1.0}));
    CHECK(to_json(Coefficient(Rational(-1, 1215))) == Json("-1/1215"));
}

TEST_CASE("built-in families round trip") {
    for (const Json& j : {Json{{"kind", "power"}, {"alpha", "1/2"}}, Json{{"kind", "mathieu"}},
                          Json{{"kind", "whittaker-hill"}, {"t", 2}, {"parity", "odd"}}}) {
        const OperatorFamily f = family_from_json(j);
        const Json out = family_to_json(f);
        const OperatorFamily g = family_from_json(out);
        CHECK(family_to_json(g) == out);
        for (int k = 1; k <= 6; ++k) {
            CHECK(f.b(k) == g.b(k));
            CHECK(f.c(k) == g.c(k));
        }
    }
    CHECK(family_from_json(Json{{"kind", "jaynes-cummings"}}).growth_alpha() == 0.5);
}

TEST_CASE("custom tables keep the exact backend") {
    const OperatorFamily f = family_from_json(custom_spec());
    REQUIRE(f.exact_coupling(3));
    CHECK(*f.exact_coupling(3) == Rational(1, 4));
    const Json out = family_to_json(f);
    CHECK(out.at("kind") == "custom");
    const OperatorFamily g = family_from_json(out);
    REQUIRE(g.exact_coupling(7));
    CHECK(*g.exact_coupling(7) == Rational(1, 4));
    CHECK(family_to_json(g) == out);

    // a binary float entry is not taken as an exact rational
    Json floaty = custom_spec();
    floaty["tables"]["c"][0] = 0.5;
    CHECK_FALSE(family_from_json(floaty).exact_coupling(1));
}

TEST_CASE("invalid family specs") {
    CHECK_THROWS_AS(family_from_json(Json{{"kind", "power"}, {"alpha", 0}, {"beta", 1}}), Error);
    CHECK_THROWS_AS(family_from_json(Json{{"kind", "nope"}}), Error);
    try {
        (void)family_from_json(Json{{"kind", "mathieu"}, {"M", 3}});
        FAIL("expected InvalidCertificate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidCertificate);
    }
    Json bad = custom_spec();
    bad["tables"]["q"][2] = 3;
    CHECK_THROWS_AS(family_from_json(bad), Error);

    CustomSequences gen;
    gen.b = [](int) { return Complex(1.0); };
    gen.c = gen.b;
    CHECK_THROWS_AS(family_to_json(OperatorFamily::custom(gen, 1.0, 0.0)), Error);
}

TEST_CASE("result documents") {
    const TaylorSeries ts = solve_branch_equation(OperatorFamily::power(Rational(1, 2)), 1, 3);
    const Json j = to_json(ts);
    CHECK(j.dump().find("-1/1215") != std::string::npos);
}
