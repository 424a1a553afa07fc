#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tunnelsplit/quadrature.hpp"

namespace ts = tunnelsplit;

TEST_CASE("smooth integrands converge to near machine precision") {
    const auto r = ts::integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(r.error_estimate < 1e-10);

    const auto s = ts::integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("interval translation does not change accuracy") {
    const auto r = ts::integrate([](double x) { return 1.0 / std::sqrt(x - 2.0); }, 2.0, 5.0);
    CHECK(r.value == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-7));
}

TEST_CASE("inverse square root endpoint singularity") {
    // One-argument form: x near the endpoint loses digits to rounding,
    // so only ~1e-8 relative is honest here.
    const auto r = ts::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("distance-to-endpoint form restores full precision") {
    // Same integrand, but built from the exact distance to the endpoint
    // (the distance argument is only meaningful on the singular half).
    const auto r = ts::integrate(
        [](double x, double dist) { return x < 0.5 ? 1.0 / std::sqrt(dist) : 1.0 / std::sqrt(x); },
        0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

    // int_0^1 dx / sqrt(1 - x^2) = pi/2, singular at the upper endpoint.
    const auto s = ts::integrate(
        [](double x, double dist) {
            return x > 0.5 ? 1.0 / std::sqrt(dist * (1.0 + x))
                           : 1.0 / std::sqrt(1.0 - x * x);
        },
        0.0, 1.0);
    CHECK(s.value == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("result metadata is populated") {
    const auto r = ts::integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(r.levels > 1);
    CHECK(r.evaluations > 10);
    CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
}

TEST_CASE("too few levels raises NoConvergenceError") {
    ts::QuadratureConfig cfg;
    cfg.max_levels = 2;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-14;
    CHECK_THROWS_AS(ts::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg),
                    ts::NoConvergenceError);
}

TEST_CASE("interior NaN raises NonFiniteSampleError") {
    CHECK_THROWS_AS(ts::integrate([](double x) { return std::sqrt(x - 0.5); }, 0.0, 1.0),
                    ts::NonFiniteSampleError);
}

TEST_CASE("find_root locates a bracketed root") {
    const double r = ts::find_root([](double x) { return std::cos(x); }, 0.0, 2.0);
    CHECK(r == doctest::Approx(M_PI / 2.0).epsilon(1e-12));

    const double s = ts::find_root([](double x) { return x * x * x - 2.0; }, 0.0, 2.0);
    CHECK(s == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
}

TEST_CASE("find_root rejects an unbracketed interval") {
    CHECK_THROWS_AS(ts::find_root([](double x) { return x * x + 1.0; }, 0.0, 1.0),
                    ts::NoBracketError);
}
