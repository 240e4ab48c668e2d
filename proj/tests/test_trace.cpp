#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trispec/closed_forms.hpp"
#include "trispec/regions.hpp"
#include "trispec/trace.hpp"

#include <cmath>

using namespace trispec;

namespace {

OperatorFamily symmetric_custom(std::function<double(int)> p, double M, double alpha) {
    CustomSequences s;
    s.b = [p](int k) { return Complex(std::sqrt(p(k))); };
    s.c = s.b;
    return OperatorFamily::custom(s, M, alpha);
}

} // namespace

TEST_CASE("limit of p_k / k") {
    const EllEstimate jc = ell_limit(OperatorFamily::power(Rational(1, 2)));
    REQUIRE(jc.value);
    CHECK(*jc.value == doctest::Approx(1.0).epsilon(1e-10));

    const EllEstimate two = ell_limit(symmetric_custom([](int k) { return 2.0 * k; }, std::sqrt(2.0), 0.5));
    REQUIRE(two.value);
    CHECK(*two.value == doctest::Approx(2.0).epsilon(1e-10));

    const auto alternating = symmetric_custom([](int k) { return k % 2 == 0 ? 2.0 * k : 0.0; }, std::sqrt(2.0), 0.5);
    CHECK_FALSE(ell_limit(alternating).value);
    CHECK_THROWS_AS(trace_limit(alternating), Error);
}

TEST_CASE("predicted trace") {
    const auto below = trace_limit(OperatorFamily::power(Rational(3, 10)));
    for (double c : below) CHECK(c == 0.0);
    const auto half = trace_limit(OperatorFamily::power(Rational(1, 2)));
    CHECK(half[0] == 0.0);
    CHECK(half[1] == 0.0);
    CHECK(half[2] == doctest::Approx(-0.5).epsilon(1e-9));
    const auto two = trace_limit(symmetric_custom([](int k) { return 2.0 * k; }, std::sqrt(2.0), 0.5));
    CHECK(two[2] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("partial trace") {
    const auto m0 = OperatorFamily::power(Rational(0));
    CHECK(std::abs(partial_trace(m0, 0.0, 0, 20).partial_sum) < 1e-12);

    const TraceReport r = partial_trace(m0, 0.3, 0, 400);
    CHECK(r.N == 400);
    CHECK(std::abs(r.partial_sum) <= 1.2e-4);
    // the telescoped phi_2(N) z^2 = -z^2/(2N+1) carries almost all of it
    CHECK(std::abs(r.partial_sum + 0.09 / 801.0) < 1e-8);
    REQUIRE(r.predicted_limit);
    CHECK(std::abs(*r.predicted_limit) == 0.0);

    try {
        (void)partial_trace(m0, 1.0, 0, 4);
        FAIL("expected ZTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZTooLarge);
    }
    CHECK_THROWS_AS((void)partial_trace(m0, 0.1, 2, 10), Error);
}

TEST_CASE("telescoped residual at alpha = 1/2") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const double z = 0.3;
    double previous = INFINITY;
    for (int N : {50, 100, 200}) {
        const TraceReport r = partial_trace(jc, z, 0, N);
        const double phi2 = to_double(phi_closed(jc, 2, N));
        const double phi4 = to_double(phi_closed(jc, 4, N));
        const Complex expected = phi2 * z * z + phi4 * std::pow(z, 4);
        CHECK(std::abs(r.telescoped_residual - (r.partial_sum - expected)) < 1e-14);
        CHECK(std::abs(r.telescoped_residual) < previous);
        previous = std::abs(r.telescoped_residual);
    }
}

TEST_CASE("sequence and cumulative deviation") {
    const auto jc = OperatorFamily::power(Rational(1, 2));
    const auto seq = partial_trace_sequence(jc, 0.2, 0, 40);
    REQUIRE(seq.size() >= 40);
    const TraceReport r = partial_trace(jc, 0.2, 0, 40);
    CHECK(std::abs(seq.back() - r.partial_sum) < 1e-12);
    for (int n = 4; n <= 30; ++n) CHECK(cumulative_deviation(jc, regions(jc, n).R_n / 2, n) <= 2.0 * n * n);
}
