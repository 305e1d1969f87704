#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dcqft/hadamard_dynamical.hpp"
#include "dcqft/random_data.hpp"
#include "oracles.hpp"

using namespace dcqft;

namespace {

constexpr double kPi = std::numbers::pi;

DynamicalDatum one(ChiralMode m) { return DynamicalDatum{{m}}; }
const DynamicalDatum a1p = one({1, 1.0, 0.0, 0.0, 0.0});
const DynamicalDatum b1p = one({1, 0.0, 0.0, 1.0, 0.0});

double coeff_distance(const DynamicalDatum& x, const DynamicalDatum& y) {
    double w = 0.0;
    // compare through sampled fields so mode ordering and explicit zeros do not matter
    for (double t : {0.0, 0.17, 0.6})
        for (double th : {0.05, 0.33, 0.81}) {
            const auto a = oracle::field(x, t, th), b = oracle::field(y, t, th);
            w = std::max({w, std::fabs(a.phi - b.phi), std::fabs(a.phit - b.phit)});
        }
    return w;
}

}  // namespace

TEST_CASE("positive frequency projection") {
    CHECK(project_positive(DynamicalDatum{}).modes.empty());
    const auto p = project_positive(a1p);
    REQUIRE(p.modes.size() == 1);
    // a sin x = 2 Re((i a / 2) e^{-i x})
    CHECK(std::abs(p.modes[0].plus - Complex(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(p.modes[0].minus) < 1e-15);

    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        const auto pd = project_positive(d);
        // phi = 2 Re sum ...
        for (double th : {0.1, 0.45}) {
            Complex s = 0.0;
            for (const auto& m : pd.modes)
                s += m.minus * std::polar(1.0, 2 * kPi * m.k * th) + m.plus * std::polar(1.0, -2 * kPi * m.k * th);
            CHECK(std::fabs(2.0 * s.real() - oracle::field(d, 0.0, th).phi) < 1e-12);
        }
        CHECK(coeff_distance(real_datum(pd), d) < 1e-12);
        CHECK(std::fabs(tau_complex(pd, project_positive(dp), 64).imag() - oracle::mu(d, dp)) < 1e-9);
    }
}

TEST_CASE("mu examples") {
    CHECK(mu(DynamicalDatum{}, a1p) == 0.0);
    CHECK(mu(a1p, a1p) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(mu(one({1, 1, 2, 3, 4}), one({2, 1, 2, 3, 4})) == 0.0);
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto d = random_datum(rng), dp = random_datum(rng);
        CHECK(std::fabs(mu(d, dp) - oracle::mu(d, dp)) < 1e-9);
        CHECK(mu(d, dp) == doctest::Approx(mu(dp, d)).epsilon(1e-13));
        CHECK(mu(d, d) >= 0.0);
    }
}

TEST_CASE("omega_mu examples") {
    CHECK(omega_mu(DynamicalDatum{}) == 1.0);
    CHECK(std::fabs(omega_mu(a1p) - std::exp(-kPi / 2)) < 1e-12);
    CHECK(std::fabs(omega_mu(a1p) - 0.20787958) < 1e-8);
    CHECK(std::fabs(omega_mu(one({2, 0, 0, 0, 1})) - 0.04321392) < 1e-8);
}

TEST_CASE("two-point function") {
    const Complex w = two_point(a1p, b1p);
    CHECK(std::fabs(w.real()) < 1e-15);
    CHECK(w.imag() == doctest::Approx(-kPi).epsilon(1e-14));
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_datum(rng), dp = random_datum(rng);
        CHECK(std::fabs(two_point(d, d).imag()) < 1e-12);
        CHECK(std::fabs(two_point(d, dp).real() - two_point(dp, d).real()) < 1e-12);
        CHECK(std::fabs(two_point(d, dp).imag() + two_point(dp, d).imag()) < 1e-12);
        CHECK(std::fabs(two_point(d, dp).imag() - 0.5 * oracle::tau_u(d, dp)) < 1e-9);
    }
}

TEST_CASE("Cauchy-Schwarz and purity") {
    CHECK(cs_inequality(DynamicalDatum{}, a1p));
    CHECK(cs_inequality(a1p, b1p));
    CHECK(0.5 * std::fabs(oracle::tau_u(a1p, b1p)) == doctest::Approx(kPi));

    const auto j = purity_maximizer(a1p);
    CHECK(coeff_distance(j, one({1, 0, 0, -1, 0})) < 1e-15);
    const double tau = oracle::tau_u(a1p, j);
    CHECK(0.25 * tau * tau / mu(j, j) == doctest::Approx(kPi));
    CHECK_THROWS(purity_maximizer(DynamicalDatum{}));

    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const auto d = random_nonzero_datum(rng), dp = random_datum(rng);
        CHECK(cs_inequality(d, dp));
        const auto jd = purity_maximizer(d);
        CHECK(coeff_distance(purity_maximizer(jd), -1.0 * d) < 1e-15);
        const double t = oracle::tau_u(d, jd);
        CHECK(std::fabs(0.25 * t * t / oracle::mu(jd, jd) - oracle::mu(d, d)) < 1e-9 * std::max(1.0, oracle::mu(d, d)));
    }
}

TEST_CASE("spacetime symmetries and duality") {
    CHECK(coeff_distance(symmetry_translate(a1p, 0.0, TorusValue{}), a1p) == 0.0);
    CHECK(coeff_distance(symmetry_translate(a1p, 1.0, TorusValue{}), a1p) < 1e-14);
    CHECK(duality_zeta_u(DynamicalDatum{}).modes.empty());
    CHECK(coeff_distance(duality_zeta_u(a1p), one({1, -1, 0, 0, 0})) == 0.0);

    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        const auto d = random_datum(rng);
        const double s = rng.uniform(-3, 3);
        const TorusValue p0 = torus_from_real(rng.uniform());
        const auto tr = symmetry_translate(d, s, p0);
        // the translated field is the old one at shifted arguments
        for (double t : {0.0, 0.3})
            for (double th : {0.2, 0.7})
                CHECK(std::fabs(oracle::field(tr, t, th).phi - oracle::field(d, t + s, th + p0.rep()).phi) < 1e-10);
        CHECK(std::fabs(omega_mu(tr) - omega_mu(d)) < 1e-12);
        const auto z = duality_zeta_u(d);
        // phi of the image is the dual field
        for (double th : {0.2, 0.7})
            CHECK(std::fabs(oracle::field(z, 0.4, th).phi - oracle::field(d, 0.4, th).phit) < 1e-12);
        CHECK(std::fabs(omega_mu(z) - omega_mu(d)) < 1e-12);
        CHECK(coeff_distance(duality_zeta_u(tr), symmetry_translate(z, s, p0)) < 1e-12);
    }
}

TEST_CASE("ground state certificate") {
    CHECK(ground_state_certificate(DynamicalDatum{}, DynamicalDatum{}, 8) == 0.0);
    CHECK(ground_state_certificate(a1p, a1p, 8) < 1e-10);
    CHECK_THROWS(ground_state_certificate(one({8, 1, 0, 0, 0}), a1p, 16));
    CHECK_THROWS(ground_state_certificate(a1p, a1p, 12));
    Rng rng(19);
    for (int i = 0; i < 100; ++i) {
        const auto d = random_datum(rng), dp = random_datum(rng);
        const double c = ground_state_certificate(d, dp, 64);
        CHECK(c < 1e-8);
        std::vector<Complex> f;
        for (int j = 0; j < 64; ++j) f.push_back(two_point(d, symmetry_translate(dp, j / 64.0, TorusValue{})));
        CHECK(std::fabs(c - oracle::negative_frequency_fraction(f)) < 1e-8);
    }
}

TEST_CASE("propagator sector") {
    CHECK(propagator_coefficients(TestForm{}).modes.empty());
    TestFormModeData unit_d;
    unit_d.modes[1][0].d_plus = 1.0;
    CHECK(mu_tilde(unit_d, unit_d) == doctest::Approx(1.0 / (4 * kPi)));

    const auto bump = bump_component(0, 1, TestFormComponent::Basis::cos, 0.0, 0.5, 64);
    const TestForm psi{{bump}};
    const auto co = propagator_coefficients(psi);
    // cos = (e^{i x} + e^{-i x}) / 2, so c+ is half the discrete transform at frequency 1
    Complex ghat = 0.0;
    for (std::size_t j = 0; j < bump.samples.size(); ++j)
        ghat += bump.samples[j] * std::polar(1.0, -2 * kPi * (bump.t0 + j * bump.dt));
    ghat *= bump.dt;
    CHECK(std::abs(co.modes.at(1)[0].c_plus - 0.5 * ghat) < 1e-12);

    TestForm open = psi;
    open.components[0].samples.back() = 1.0;
    CHECK_THROWS(propagator_coefficients(open));

    Rng rng(23);
    for (int i = 0; i < 6; ++i) {
        const auto a = random_bump_form(rng, 3, 24), b = random_bump_form(rng, 3, 24);
        const auto ca = propagator_coefficients(a), cb = propagator_coefficients(b);
        for (const auto& [k, arr] : ca.modes)
            for (const auto& x : arr) {
                CHECK(std::abs(x.d_plus + std::conj(x.c_minus)) < 1e-12);
                CHECK(std::abs(x.d_minus + std::conj(x.c_plus)) < 1e-12);
            }
        const Complex formula(mu_tilde(ca, cb), 0.5 * sigma_tilde(ca, cb));
        const Complex lib = two_point_kernel_oracle(a, b, 7);
        const Complex ref = oracle::propagator_kernel(a, b, 3, 7);
        CHECK(std::abs(lib - ref) < 1e-9);
        CHECK(std::abs(formula - ref) < 1e-5);
        CHECK(std::abs(two_point_kernel_oracle(b, a, 7) - std::conj(lib)) < 1e-9);
    }
    CHECK_THROWS(two_point_kernel_oracle(psi, psi, 2));
}
