#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "dcqft/core_numerics.hpp"
#include "dcqft/random_data.hpp"

using namespace dcqft;

TEST_CASE("torus_from_real reduces into [0, 1)") {
    CHECK(torus_from_real(0.0).rep() == 0.0);
    CHECK(torus_from_real(-0.25).rep() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(torus_from_real(6.283185307).rep() == doctest::Approx(6.283185307 - 6.0).epsilon(1e-12));
    CHECK(torus_from_real(2.0 * std::numbers::pi).rep() == doctest::Approx(0.283185307179586).epsilon(1e-12));
    CHECK(torus_from_real(-1e-18).rep() < 1.0);
    CHECK(torus_from_real(7.0).rep() == 0.0);
}

TEST_CASE("torus_from_real rejects non-finite input") {
    CHECK_THROWS_AS(torus_from_real(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(torus_from_real(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("torus_distance wraps around") {
    CHECK(torus_distance(torus_from_real(0.1), torus_from_real(0.9)) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(torus_distance(torus_from_real(0.37), torus_from_real(0.37)) == 0.0);
    CHECK(torus_distance(torus_from_real(0.0), torus_from_real(0.5)) == 0.5);
    CHECK(torus_norm(2.9) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("torus arithmetic stays canonical and obeys the group laws") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform(-50.0, 50.0);
        const auto n = rng.integer(-1000, 1000);
        const auto a = torus_from_real(x), b = torus_from_real(rng.uniform(-3.0, 3.0));
        CHECK(torus_distance(torus_from_real(x + static_cast<double>(n)), a) < 1e-12);
        for (auto v : {a + b, a - b, -a, n * a}) {
            CHECK(v.rep() >= 0.0);
            CHECK(v.rep() < 1.0);
        }
        CHECK(torus_distance(a + (-a), TorusValue{}) < 1e-15);
        CHECK(torus_distance(a + b, b + a) == 0.0);
        // triangle inequality on the circle
        const auto c = torus_from_real(rng.uniform());
        CHECK(torus_distance(a, c) <= torus_distance(a, b) + torus_distance(b, c) + 1e-15);
    }
}

TEST_CASE("tolerances and complex scalars are validated") {
    Tolerances t;
    CHECK(t.eps_torus == 1e-9);
    CHECK(t.eps_quadrature == 1e-6);
    CHECK(t.eps_linear == 1e-12);
    CHECK_NOTHROW(t.validate());
    t.eps_linear = 0.0;
    CHECK_THROWS(t.validate());
    CHECK_THROWS_AS(checked_complex({std::numeric_limits<double>::quiet_NaN(), 0.0}), std::domain_error);
    CHECK(std::abs(unit_phase(torus_from_real(0.25)) - Complex(0.0, 1.0)) < 1e-15);
}
