#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dcqft/character_s1.hpp"
#include "dcqft/random_data.hpp"
#include "oracles.hpp"

using namespace dcqft;

namespace {

constexpr double kPi = std::numbers::pi;

FourierCharacter only_mode(ChiralMode m) { return FourierCharacter{{}, {}, 0, 0, {m}}; }

}  // namespace

TEST_CASE("curvature examples") {
    const auto zero = curvature(FourierCharacter{});
    CHECK(zero.harmonic_dt == 0);
    CHECK(zero.harmonic_dtheta == 0);
    CHECK(zero.modes.empty());

    FourierCharacter h;
    h.n = 1;
    const auto c = curvature(h);
    CHECK(c.harmonic_dtheta == 1);
    CHECK(c.harmonic_dt == 0);
    CHECK(c.modes.empty());

    const auto cm = curvature(only_mode({1, 0.0, 1.0, 0.0, 0.0}));
    REQUIRE(cm.modes.size() == 1);
    // 2 pi cos(2 pi (t - theta)) dt - 2 pi cos(2 pi (t - theta)) dtheta
    for (double t : {0.0, 0.13, 0.71})
        for (double th : {0.0, 0.29, 0.9}) {
            const auto [ft, fth] = evaluate_form(cm, t, th);
            CHECK(ft == doctest::Approx(2 * kPi * std::cos(2 * kPi * (t - th))).epsilon(1e-12));
            CHECK(fth == doctest::Approx(-2 * kPi * std::cos(2 * kPi * (t - th))).epsilon(1e-12));
        }
}

TEST_CASE("curvature matches finite differences of the sampled field") {
    Rng rng(11);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        const auto x = random_character(rng, ModeSampling{4, 4, 1.0, false});
        const auto c = curvature(x), ct = curvature_dual(x);
        const double t = rng.uniform(-1.0, 1.0), th = rng.uniform();
        const auto [ft, fth] = evaluate_form(c, t, th);
        const auto [gt, gth] = evaluate_form(ct, t, th);
        const double dt = (field_lift(x, t + h, th) - field_lift(x, t - h, th)) / (2 * h);
        const double dth = (field_lift(x, t, th + h) - field_lift(x, t, th - h)) / (2 * h);
        const double dtt = (dual_field_lift(x, t + h, th) - dual_field_lift(x, t - h, th)) / (2 * h);
        const double dtht = (dual_field_lift(x, t, th + h) - dual_field_lift(x, t, th - h)) / (2 * h);
        CHECK(std::fabs(ft - dt) < 1e-4);
        CHECK(std::fabs(fth - dth) < 1e-4);
        CHECK(std::fabs(gt - dtt) < 1e-4);
        CHECK(std::fabs(gth - dtht) < 1e-4);
        // curv h~ = * curv h with *dtheta = -dt, *dt = -dtheta
        CHECK(std::fabs(gt + fth) < 1e-9);
        CHECK(std::fabs(gth + ft) < 1e-9);
        CHECK(exterior_derivative_residual(c) < 1e-12);
    }
}

TEST_CASE("characteristic class") {
    CHECK(characteristic_class(FourierCharacter{}) == std::pair<std::int64_t, std::int64_t>{0, 0});
    FourierCharacter h;
    h.n = 2;
    h.nt = -1;
    CHECK(characteristic_class(h) == std::pair<std::int64_t, std::int64_t>{2, -1});
    CHECK(characteristic_class(only_mode({3, 1.0, 2.0, 0.5, 0.1})) == std::pair<std::int64_t, std::int64_t>{0, 0});
}

TEST_CASE("restriction to the Cauchy surface") {
    const auto z = restrict_to_cauchy(FourierCharacter{});
    CHECK(z.modes.empty());
    auto r = restrict_to_cauchy(only_mode({1, 1.0, 0.0, 0.0, 0.0}));
    REQUIRE(r.modes.size() == 1);
    CHECK(r.modes[0].sin_h == 1.0);
    CHECK(r.modes[0].sin_ht == -1.0);
    CHECK(r.modes[0].cos_h == 0.0);
    r = restrict_to_cauchy(only_mode({1, 0.0, 0.0, 0.0, 1.0}));
    CHECK(r.modes[0].cos_h == -1.0);
    CHECK(r.modes[0].cos_ht == -1.0);

    // agrees with the sampled fields at t = 0
    Rng rng(3);
    const auto d = random_datum(rng);
    const auto rr = restrict_to_cauchy(FourierCharacter{{}, {}, 0, 0, d.modes});
    for (double th : {0.05, 0.4, 0.77}) {
        double f = 0.0, ft = 0.0;
        for (const auto& m : rr.modes) {
            f += m.cos_h * std::cos(2 * kPi * m.k * th) + m.sin_h * std::sin(2 * kPi * m.k * th);
            ft += m.cos_ht * std::cos(2 * kPi * m.k * th) + m.sin_ht * std::sin(2 * kPi * m.k * th);
        }
        CHECK(f == doctest::Approx(oracle::field(d, 0.0, th).phi).epsilon(1e-12));
        CHECK(ft == doctest::Approx(oracle::field(d, 0.0, th).phit).epsilon(1e-12));
    }
}

TEST_CASE("sector decomposition") {
    const auto z = decompose(FourierCharacter{});
    CHECK(z.dynamical.modes.empty());
    CHECK(z.topological.v[0] == 0);

    FourierCharacter h;
    h.h0 = torus_from_real(0.3);
    h.n = 2;
    h.modes = {{2, 0.5, 0.0, 0.0, -1.0}};
    const auto s = decompose(h);
    CHECK(s.topological.u[0].rep() == doctest::Approx(0.3));
    CHECK(s.topological.v[0] == 2);
    CHECK(s.dynamical.modes == h.modes);
    const auto back = recompose(s.topological, s.dynamical);
    CHECK(back.n == 2);
    CHECK(back.modes == h.modes);
}

TEST_CASE("sigma examples") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto h = random_character(rng);
        CHECK(torus_distance(sigma(h, h), TorusValue{}) < 1e-9);
    }
    FourierCharacter a, b;
    a.n = 1;
    b.ht0 = torus_from_real(0.25);
    CHECK(sigma(a, b).rep() == doctest::Approx(0.75).epsilon(1e-15));

    const auto pa = only_mode({1, 1.0, 0.0, 0.0, 0.0});
    const auto pb = only_mode({1, 0.0, 0.0, 1.0, 0.0});
    CHECK(sigma(pa, pb).rep() == doctest::Approx(0.7168146928).epsilon(1e-9));
    CHECK(tau_u(DynamicalDatum{pa.modes}, DynamicalDatum{pb.modes}) == doctest::Approx(-2 * kPi).epsilon(1e-15));
}

TEST_CASE("sigma quadrature") {
    CHECK(sigma_quadrature(DynamicalDatum{}, DynamicalDatum{}, 16).rep() == 0.0);
    const DynamicalDatum a{{{1, 1.0, 0.0, 0.0, 0.0}}}, b{{{1, 0.0, 0.0, 1.0, 0.0}}};
    CHECK(torus_distance(sigma_quadrature(a, b, 64), torus_from_real(-2 * kPi)) < 1e-6);
    const DynamicalDatum c{{{2, 0.3, -0.2, 0.7, 1.1}}};
    CHECK(std::fabs(sigma_quadrature_real(a, c, 64)) < 1e-12);
    CHECK_THROWS(sigma_quadrature_real(c, c, 8));
}

TEST_CASE("sigma properties against independent oracles") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_datum(rng), dp = random_datum(rng);
        const int kmax = std::max({1, max_mode(d.modes), max_mode(dp.modes)});
        CHECK(std::fabs(tau_u(d, dp) - oracle::sigma_quadrature(d, dp, 16 * kmax)) < 1e-6);
        CHECK(std::fabs(tau_u(2.0 * d, dp) - 2.0 * tau_u(d, dp)) < 1e-9);
        const auto h = random_character(rng), hp = random_character(rng);
        CHECK(torus_distance(sigma(h, hp), torus_from_real(oracle::sigma_character(h, hp))) < 1e-9);
        CHECK(torus_distance(sigma(h, hp) + sigma(hp, h), TorusValue{}) < 1e-9);
        // doubling (n, n~) doubles the topological contribution
        auto h2 = h;
        h2.n *= 2;
        h2.nt *= 2;
        auto ht = h, hpt = hp;
        ht.modes.clear();
        hpt.modes.clear();
        auto h2t = h2;
        h2t.modes.clear();
        auto ht_half = ht;
        ht_half.h0 = {};
        ht_half.ht0 = {};
        auto h2_half = h2t;
        h2_half.h0 = {};
        h2_half.ht0 = {};
        CHECK(torus_distance(sigma(h2_half, hpt), 2 * sigma(ht_half, hpt)) < 1e-9);
    }
}

TEST_CASE("mode lists are validated") {
    CHECK_THROWS(make_datum({{0, 1.0, 0.0, 0.0, 0.0}}));
    CHECK_THROWS(make_datum({{1, 1.0, 0.0, 0.0, 0.0}, {1, 0.0, 1.0, 0.0, 0.0}}));
    CHECK(make_datum({{3, 1.0, 0.0, 0.0, 0.0}, {1, 0.0, 1.0, 0.0, 0.0}}).modes.front().k == 1);
    const auto d = make_datum({{1, 1.0, 0.0, 0.0, 0.0}});
    CHECK((d - d).modes.empty());
}
