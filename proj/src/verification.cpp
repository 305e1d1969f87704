#include "dcqft/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "dcqft/character_s1.hpp"
#include "dcqft/cohomology_tables.hpp"
#include "dcqft/fock_space.hpp"
#include "dcqft/hadamard_dynamical.hpp"
#include "dcqft/mode_solver.hpp"
#include "dcqft/random_data.hpp"
#include "dcqft/splittings.hpp"
#include "dcqft/topological_sector.hpp"
#include "dcqft/weyl_algebra.hpp"

namespace dcqft {

namespace {

constexpr double kPi = std::numbers::pi;

// Running maximum that sticks at NaN.
struct Worst {
    double v = 0.0;
    void operator()(double x) {
        if (std::isnan(v)) return;
        if (std::isnan(x) || x > v) v = x;
    }
};

double rel(double diff, double scale) { return std::fabs(diff) / std::max(1.0, std::fabs(scale)); }

struct Check {
    std::string group;
    std::string name;
    std::string reference;
    std::function<double(const Tolerances&)> tolerance;
    std::function<double(Rng&, const VerifyOptions&)> run;
};

auto eps_torus = [](const Tolerances& t) { return t.eps_torus; };
auto eps_linear = [](const Tolerances& t) { return t.eps_linear; };
auto eps_quadrature = [](const Tolerances& t) { return t.eps_quadrature; };
auto fixed(double x) {
    return [x](const Tolerances&) { return x; };
}

ModeSampling small_dyadic() { return ModeSampling{3, 4, 1.0, true}; }

int n_of(const VerifyOptions& o, int factor = 1) { return std::max(1, o.samples * factor); }

// ---- torus ----

double torus_periodicity(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o, 10); ++i) {
        const double x = rng.uniform(-10.0, 10.0);
        const auto n = rng.integer(-1000, 1000);
        w(torus_distance(torus_from_real(x + static_cast<double>(n)), torus_from_real(x)));
    }
    return w.v;
}

double torus_group_laws(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o, 10); ++i) {
        const auto a = torus_from_real(rng.uniform(-5.0, 5.0));
        const auto b = torus_from_real(rng.uniform(-5.0, 5.0));
        const auto c = torus_from_real(rng.uniform(-5.0, 5.0));
        w(torus_distance((a + b) + c, a + (b + c)));
        w(torus_distance(a + b, b + a));
        w(torus_distance(a + (-a), TorusValue{}));
        w(torus_distance(a - b, a + (-b)));
        const auto n = rng.integer(-20, 20);
        w(torus_distance(n * (a + b), n * a + n * b));
    }
    return w.v;
}

// ---- characters and sigma ----

double sigma_antisymmetry(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o, 10); ++i) {
        const auto h = random_character(rng);
        const auto hp = random_character(rng);
        w(torus_distance(sigma(h, hp), -sigma(hp, h)));
        w(torus_distance(sigma(h, h), TorusValue{}));
    }
    return w.v;
}

double sigma_bilinearity(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o, 10); ++i) {
        const auto x = random_character(rng);
        const auto y = random_character(rng);
        const auto z = random_character(rng);
        w(torus_distance(sigma(x + y, z), sigma(x, z) + sigma(y, z)));
        w(torus_distance(sigma(z, x + y), sigma(z, x) + sigma(z, y)));
        const auto j = rng.integer(-3, 3);
        FourierCharacter jx;
        for (std::int64_t r = 0; r < std::abs(j); ++r) jx = jx + (j > 0 ? x : -x);
        w(torus_distance(sigma(jx, z), j * sigma(x, z)));
    }
    return w.v;
}

double sigma_dynamical_reduction(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        w(torus_distance(sigma(recompose(circle_topological_model().zero(), d),
                               recompose(circle_topological_model().zero(), dp)),
                         torus_from_real(tau_u(d, dp))));
    }
    return w.v;
}

double sigma_quadrature_oracle(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        const int kmax = std::max({1, max_mode(d.modes), max_mode(dp.modes)});
        w(std::fabs(tau_u(d, dp) - sigma_quadrature_real(d, dp, 16 * kmax)));
    }
    return w.v;
}

double sigma_topological_reduction(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto h = random_topological_character(rng);
        const auto hp = random_topological_character(rng);
        w(torus_distance(sigma(h, hp), tau_lr(decompose(h).topological, decompose(hp).topological)));
    }
    return w.v;
}

double curvature_closed_and_dual(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto h = random_character(rng);
        w(exterior_derivative_residual(curvature(h)));
        w(exterior_derivative_residual(curvature_dual(h)));
        w(curvature_distance(curvature_dual(h), hodge_star(curvature(h))));
        const auto [n, nt] = characteristic_class(h);
        w(std::fabs(static_cast<double>(n - h.n)) + std::fabs(static_cast<double>(nt - h.nt)));
    }
    return w.v;
}

double sector_decomposition(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto h = random_character(rng);
        const auto s = decompose(h);
        const auto back = recompose(s.topological, s.dynamical);
        w(torus_distance(back.h0, h.h0));
        w(torus_distance(back.ht0, h.ht0));
        w(std::fabs(static_cast<double>(back.n - h.n)) + std::fabs(static_cast<double>(back.nt - h.nt)));
        w(back.modes == h.modes ? 0.0 : 1.0);
    }
    return w.v;
}

// ---- Weyl algebra ----

template <GroupModel M, class Gen>
double weyl_laws(const M& model, Gen gen, Rng& rng, int triples) {
    Worst w;
    const auto one = unit(model);
    for (int i = 0; i < triples; ++i) {
        const auto a = random_weyl(rng, model, gen, 3, true);
        const auto b = random_weyl(rng, model, gen, 3, true);
        const auto c = random_weyl(rng, model, gen, 3, true);
        const double na = banach_norm(a), nb = banach_norm(b), nc = banach_norm(c);
        w(weyl_distance((a * b) * c, a * (b * c)) / std::max(1.0, na * nb * nc));
        w(weyl_distance(adjoint(a * b), adjoint(b) * adjoint(a)) / std::max(1.0, na * nb));
        w(weyl_distance(adjoint(adjoint(a)), a));
        w(weyl_distance(one * a, a) / std::max(1.0, na));
        w(weyl_distance(a * one, a) / std::max(1.0, na));
        const auto g = gen();
        const auto h = gen();
        const auto lhs = generator(model, g) * generator(model, h);
        const auto rhs = generator(model, model.add(g, h), unit_phase(model.presymplectic(g, h)));
        w(weyl_distance(lhs, rhs));
        w(weyl_distance(generator(model, g) * generator(model, model.negate(g)), one));
        // Banach *-algebra norm
        w(std::fabs(banach_norm(adjoint(a)) - na));
        w(std::max(0.0, banach_norm(a * b) - na * nb) / std::max(1.0, na * nb));
    }
    return w.v;
}

double weyl_character(Rng& rng, const VerifyOptions& o) {
    return weyl_laws(
        CharacterModel{}, [&rng] { return random_character(rng, small_dyadic()); }, rng, n_of(o, 2));
}

double weyl_dynamical(Rng& rng, const VerifyOptions& o) {
    return weyl_laws(
        DynamicalModel{}, [&rng] { return random_datum(rng, small_dyadic()); }, rng, n_of(o, 2));
}

double weyl_topological(Rng& rng, const VerifyOptions& o) {
    const TopologicalModel model(2, 2, 1, 3);
    return weyl_laws(
        model, [&] { return random_topological(rng, model, true, 2); }, rng, n_of(o, 2));
}

// ---- quasifree dynamical state ----

double state_point_values(Rng&, const VerifyOptions&) {
    Worst w;
    w(std::fabs(omega_mu(DynamicalDatum{}) - 1.0));
    w(std::fabs(omega_mu(make_datum({{1, 1.0, 0.0, 0.0, 0.0}})) - std::exp(-kPi / 2.0)));
    ModeSpectrum s{2, 1, {{1.0, 1}}};
    w(std::fabs(omega_mu_general(s, ModeInitialData{{{1.0, 0.0}}}) - std::exp(-0.25)));
    return w.v;
}

double mu_symmetric_psd(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        const auto e = random_datum(rng);
        w(rel(mu(d, dp) - mu(dp, d), mu(d, dp)));
        w(std::max(0.0, -mu(d, d)));
        const double lin = 2.0 * mu(d, e) + mu(dp, e);
        w(rel(mu(2.0 * d + dp, e) - lin, lin));
        w(std::fabs(omega_mu(d) - std::exp(-0.5 * mu(d, d))));
    }
    return w.v;
}

double tau_complex_split(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        const int kmax = std::max({1, max_mode(d.modes), max_mode(dp.modes)});
        const Complex z = tau_complex(project_positive(d), project_positive(dp), 16 * kmax);
        const double m = mu(d, dp), t = tau_u(d, dp);
        w(rel(z.imag() - m, m));
        w(rel(z.real() - 0.5 * t, t));
        const Complex tp = two_point(d, dp);
        w(rel(std::abs(tp - Complex(m, 0.5 * t)), std::abs(tp)));
        w(rel(tau_u(real_datum(project_positive(d)), dp) - t, t));
    }
    return w.v;
}

double cauchy_schwarz(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o, 10); ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        const double rhs = std::sqrt(mu(d, d) * mu(dp, dp));
        w(std::max(0.0, 0.5 * std::fabs(tau_u(d, dp)) - rhs) / std::max(1.0, rhs));
        w(cs_inequality(d, dp, o.tol.eps_linear) ? 0.0 : 1.0);

        const auto s = random_spectrum(rng, 1, 3);
        const auto a = random_initial_data(rng, s);
        const auto b = random_initial_data(rng, s);
        const double rg = std::sqrt(mu_general(s, a, a) * mu_general(s, b, b));
        w(std::max(0.0, 0.5 * std::fabs(tau_u_general(s, a, b)) - rg) / std::max(1.0, rg));
        w(cs_inequality_general(s, a, b, o.tol.eps_linear) ? 0.0 : 1.0);
    }
    return w.v;
}

double purity(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_nonzero_datum(rng);
        const auto j = purity_maximizer(d);
        const double t = tau_u(d, j);
        const double m = mu(d, d);
        w(rel(0.25 * t * t / mu(j, j) - m, m));
    }
    return w.v;
}

double invariance(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const double ref = omega_mu(d);
        w(std::fabs(omega_mu(duality_zeta_u(d)) - ref));
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                const double s = -1.0 + 0.5 * a;
                const auto phi0 = torus_from_real(0.2 * b);
                w(std::fabs(omega_mu(symmetry_translate(d, s, phi0)) - ref));
            }
    }
    return w.v;
}

double max_coefficient_gap(const DynamicalDatum& x, const DynamicalDatum& y) {
    double g = 0.0;
    for (const auto& m : (x - y).modes)
        g = std::max({g, std::fabs(m.a_plus), std::fabs(m.a_minus), std::fabs(m.b_plus), std::fabs(m.b_minus)});
    return g;
}

double zeta_translation_commute(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const double s = rng.uniform(-2.0, 2.0);
        const auto phi0 = torus_from_real(rng.uniform());
        w(max_coefficient_gap(duality_zeta_u(symmetry_translate(d, s, phi0)),
                              symmetry_translate(duality_zeta_u(d), s, phi0)));
    }
    return w.v;
}

double ground_state(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        w(ground_state_certificate(d, dp, 64));
    }
    return w.v;
}

double propagator_conjugation(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto co = propagator_coefficients(random_bump_form(rng));
        for (const auto& [k, arr] : co.modes)
            for (const auto& c : arr) {
                w(std::abs(c.d_plus + std::conj(c.c_minus)));
                w(std::abs(c.d_minus + std::conj(c.c_plus)));
            }
    }
    return w.v;
}

double propagator_kernel(Rng& rng, const VerifyOptions& o) {
    Worst w;
    const int pairs = std::max(1, std::min(o.samples, 10));
    for (int i = 0; i < pairs; ++i) {
        const auto a = random_bump_form(rng, 3, 32);
        const auto b = random_bump_form(rng, 3, 32);
        const Complex coef = two_point_tilde(propagator_coefficients(a), propagator_coefficients(b));
        const Complex formula(mu_tilde(propagator_coefficients(a), propagator_coefficients(b)),
                              0.5 * sigma_tilde(propagator_coefficients(a), propagator_coefficients(b)));
        w(std::abs(coef - formula));
        w(std::abs(two_point_kernel_oracle(a, b, 7) - formula));
    }
    return w.v;
}

// ---- topological sector ----

TopologicalModel random_model(Rng& rng, bool self_dual) {
    const int k = static_cast<int>(rng.integer(1, 3));
    const auto n = static_cast<std::size_t>(rng.integer(1, 3));
    if (self_dual) return TopologicalModel(n, n, k, 2 * k);
    return TopologicalModel(n, n, k, k + static_cast<int>(rng.integer(0, 3)));
}

TopologicalWeyl random_topological_weyl(Rng& rng, const TopologicalModel& model, int terms, int vmax) {
    return random_weyl(rng, model, [&] { return random_topological(rng, model, false, vmax); }, terms);
}

double tau_lr_form(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto model = random_model(rng, false);
        const auto x = random_topological(rng, model);
        const auto y = random_topological(rng, model);
        const auto z = random_topological(rng, model);
        w(torus_distance(tau_lr(x, y), -tau_lr(y, x)));
        w(torus_distance(tau_lr(model.add(x, y), z), tau_lr(x, z) + tau_lr(y, z)));
        w(torus_distance(tau_lr(x, x), TorusValue{}));
    }
    return w.v;
}

double topological_positivity(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o, 2); ++i) {
        const auto model = random_model(rng, false);
        const auto a = random_topological_weyl(rng, model, 6, 1);
        const auto aa = adjoint(a) * a;
        const double brute = evaluate_state<TopologicalModel>(omega_t, aa).real();
        w(rel(brute - omega_t_grouped(a), brute));
        w(std::fabs(evaluate_state<TopologicalModel>(omega_t, aa).imag()));
        // faithful: omega_t0(a* a) = sum |alpha|^2 > 0
        double l2 = 0.0;
        for (const auto& [key, t] : a.terms()) l2 += std::norm(t.c);
        const Complex f = evaluate_state<TopologicalModel>(omega_t0, aa);
        w(rel(f.real() - l2, l2));
        w(f.real() > 0.0 ? 0.0 : 1.0);
    }
    return w.v;
}

double gns_reconstruction(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o, 2); ++i) {
        const auto model = random_model(rng, false);
        const auto a = random_topological_weyl(rng, model, 5, 1);
        const GnsVector vac = ket(IntVector(model.n(), 0), IntVector(model.n_tilde(), 0));
        const Complex lhs = inner_product(vac, represent(a, vac));
        const Complex rhs = evaluate_state<TopologicalModel>(omega_t, a);
        w(std::abs(lhs - rhs) / std::max(1.0, banach_norm(a)));
        // the representation is a homomorphism on the quotient
        const auto b = random_topological_weyl(rng, model, 3, 1);
        const auto psi = random_gns_vector(rng, model, 3, 2);
        w(gns_distance(represent(a * b, psi), represent(a, represent(b, psi))) /
          std::max(1.0, banach_norm(a) * banach_norm(b) * psi.norm()));
    }
    return w.v;
}

double gns_well_defined(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto model = random_model(rng, false);
        const auto x = random_topological(rng, model);
        auto lattice = model.zero();
        lattice.v = x.v;
        lattice.vt = x.vt;
        // b lies in the Gelfand ideal
        const auto b = generator(model, lattice) - generator(model, x, unit_phase(-gns_phase(x)));
        w(gns_quotient(b).norm());
        const auto a = random_topological_weyl(rng, model, 4, 2);
        const Complex c = random_complex(rng);
        w(gns_distance(gns_quotient(a), gns_quotient(a + c * b)));
        const auto y = random_topological(rng, model);
        w(gns_distance(gns_quotient(generator(model, y) * b), GnsVector{}));
    }
    return w.v;
}

double translation_and_rotation(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto model = random_model(rng, false);
        const auto x = random_topological(rng, model);
        const auto& v = x.v;
        const auto& vt = x.vt;
        const auto y = random_topological(rng, model);
        const GnsVector k = ket(y.v, y.vt);
        IntVector sv = y.v, svt = y.vt;
        for (std::size_t j = 0; j < sv.size(); ++j) sv[j] += v[j];
        for (std::size_t j = 0; j < svt.size(); ++j) svt[j] += vt[j];
        w(gns_distance(represent(model, translation_element(model, v), k), ket(sv, y.vt)));
        w(gns_distance(represent(model, translation_tilde_element(model, vt), k), ket(y.v, svt)));
        const std::int64_t eps = model.epsilon();
        w(gns_distance(represent(model, rotation_element(model, x.u), k),
                       ket(y.v, y.vt, unit_phase(-2 * eps * pairing_f(x.u, y.vt)))));
        w(gns_distance(represent(model, rotation_tilde_element(model, x.ut), k),
                       ket(y.v, y.vt, unit_phase(2 * pairing_f(x.ut, y.v)))));
    }
    return w.v;
}

double duality_unitary(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto model = random_model(rng, true);
        const auto psi = random_gns_vector(rng, model);
        const auto chi = random_gns_vector(rng, model);
        const auto Upsi = duality_U(model, psi);
        w(std::abs(inner_product(Upsi, duality_U(model, chi)) - inner_product(psi, chi)));
        w(std::fabs(Upsi.norm() - psi.norm()));
        for (std::size_t j = 0; j < model.n(); ++j)
            w(gns_distance(duality_U(model, momentum(model, j, psi)), momentum_tilde(model, j, Upsi)));
        const auto u = random_topological(rng, model).u;
        w(gns_distance(duality_U(model, represent(model, rotation_element(model, u), psi)),
                       represent(model, rotation_tilde_element(model, u), Upsi)));
    }
    return w.v;
}

// ---- mode solver ----

std::pair<int, int> random_grading(Rng& rng) {
    static const std::pair<int, int> choices[] = {{1, 2}, {2, 4}, {1, 3}, {2, 3}, {1, 1}, {3, 4}};
    return choices[rng.integer(0, 5)];
}

double mode_mu_general(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto [k, m] = random_grading(rng);
        const auto s = random_spectrum(rng, k, m);
        const auto a = random_initial_data(rng, s);
        const auto b = random_initial_data(rng, s);
        w(rel(mu_general(s, a, b) - mu_general(s, b, a), mu_general(s, a, b)));
        w(std::max(0.0, -mu_general(s, a, a)));
        w(rel(tau_u_general(s, a, b) + tau_u_general(s, b, a), tau_u_general(s, a, b)));
        w(std::fabs(omega_mu_general(s, a) - std::exp(-0.5 * mu_general(s, a, a))));
    }
    return w.v;
}

double mode_fd_residual(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto [k, m] = random_grading(rng);
        const auto s = random_spectrum(rng, k, m);
        const auto sol = solve_cauchy(s, random_initial_data(rng, s));
        for (int j = 0; j < 5; ++j) w(verify_duality_equation(sol, rng.uniform(0.0, 10.0), 1e-3));
    }
    return w.v;
}

double mode_initial_energy(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto [k, m] = random_grading(rng);
        const auto s = random_spectrum(rng, k, m);
        const auto d = random_initial_data(rng, s);
        const auto sol = solve_cauchy(s, d);
        const auto lam = s.slot_lambdas();
        for (std::size_t j = 0; j < lam.size(); ++j) {
            w(std::fabs(sol.f(j, 0.0) - d.slots[j].alpha / lam[j]));
            w(std::fabs(sol.df(j, 0.0) - sol.epsilon() * d.slots[j].alpha_tilde));
        }
        const double e0 = sol.energy(0.0);
        for (int j = 1; j <= 100; ++j) w(rel(sol.energy(0.1 * j) - e0, e0));
    }
    return w.v;
}

double mode_circle_bridge(Rng& rng, const VerifyOptions& o) {
    Worst w;
    std::vector<std::pair<DynamicalDatum, DynamicalDatum>> pairs;
    for (int i = 0; i < n_of(o); ++i) {
        const auto d = random_datum(rng);
        const auto dp = random_datum(rng);
        const int kmax = std::max({1, max_mode(d.modes), max_mode(dp.modes)});
        const auto b = circle_bridge(d, kmax);
        const auto bp = circle_bridge(dp, kmax);
        w(rel(mu_general(b.spectrum, b.data, bp.data) - mu(d, dp), mu(d, dp)));
        w(std::fabs(omega_mu_general(b.spectrum, b.data) - omega_mu(d)));
        w(rel(tau_u_general(b.spectrum, b.data, bp.data) - tau_u(d, dp), tau_u(d, dp)));
        // the cos slot of mode k follows the projection of phi onto sqrt(2) cos(2 pi k theta)
        if (!d.modes.empty()) {
            const auto sol = solve_cauchy(b.spectrum, b.data);
            const int kk = d.modes.front().k;
            const double t = rng.uniform(0.0, 3.0);
            const int n = 16 * kmax;
            double pc = 0.0, ps = 0.0;
            for (int l = 0; l < n; ++l) {
                const double th = static_cast<double>(l) / n;
                pc += phi(d, t, th) * std::numbers::sqrt2 * std::cos(2.0 * kPi * kk * th) / n;
                ps += phi(d, t, th) * std::numbers::sqrt2 * std::sin(2.0 * kPi * kk * th) / n;
            }
            const auto slot = static_cast<std::size_t>(2 * (kk - 1));
            w(std::fabs(sol.f(slot, t) - pc));
            w(std::fabs(sol.f(slot + 1, t) - ps));
        }
        if (tau_u(d, dp) != 0.0) pairs.emplace_back(d, dp);
    }
    if (!pairs.empty()) w(std::fabs(calibrate_tau_bridge(pairs) - kTauBridgeConstant));
    return w.v;
}

// ---- splittings ----

double splitting_general(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto model = random_splitting_model(rng, SplittingCase::general, static_cast<int>(rng.integer(1, 4)));
        w(corrected_pairing_residual(model, correct_x_general(model)));
    }
    return w.v;
}

double splitting_self_dual(Rng& rng, const VerifyOptions& o, int parity) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const int k = 2 * static_cast<int>(rng.integer(0, 2)) + parity + (parity == 0 ? 2 : 0);
        const auto model = random_splitting_model(rng, SplittingCase::self_dual, k);
        w(corrected_pairing_residual(model, correct_x_duality(model, o.tol)));
    }
    return w.v;
}

double splitting_orthogonality(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 6));
        const auto nt = static_cast<std::size_t>(rng.integer(1, 6));
        TorusVector p(n), pt(nt);
        IntVector v(n), vt(nt);
        for (auto& x : p) x = torus_from_real(rng.uniform());
        for (auto& x : pt) x = torus_from_real(rng.uniform());
        for (auto& x : v) x = rng.integer(-5, 5);
        for (auto& x : vt) x = rng.integer(-5, 5);
        const int eps = rng.integer(0, 1) == 0 ? 1 : -1;
        w(orthogonality_residual(p, correct_a(p), pt, correct_b(pt), v, vt, eps));
    }
    return w.v;
}

// ---- cohomology ----

double kunneth_table(Rng&, const VerifyOptions&) {
    Worst w;
    const std::pair<const char*, long> table[] = {{"S1xS2", 1}, {"T3", 3}, {"S3", 0}};
    for (const auto& [name, rank] : table) w(std::fabs(static_cast<double>(betti(Space::parse(name), 2) - rank)));
    const auto [n, nt] = topological_ranks(Space::parse("S1"), 1, 2);
    w(std::fabs(static_cast<double>(n - 1)) + std::fabs(static_cast<double>(nt - 1)));
    return w.v;
}

double poincare_duality(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        std::vector<int> dims;
        const auto f = rng.integer(1, 4);
        for (std::int64_t j = 0; j < f; ++j) dims.push_back(static_cast<int>(rng.integer(1, 4)));
        const auto b = Space::product(dims).betti_sequence();
        for (std::size_t j = 0; j < b.size(); ++j) w(std::fabs(static_cast<double>(b[j] - b[b.size() - 1 - j])));
        long total = 0;
        for (auto x : b) total += x;
        w(std::fabs(static_cast<double>(total - (1L << dims.size()))));
    }
    return w.v;
}

// ---- Fock space ----

FockSpacePtr random_fock(Rng& rng) {
    return std::make_shared<const FockSpace>(static_cast<std::size_t>(rng.integer(1, 4)),
                                             static_cast<std::size_t>(rng.integer(1, 4)));
}

FockVector random_fock_vector(Rng& rng, const FockSpacePtr& space, std::size_t max_sector) {
    FockVector v(space);
    for (std::size_t p = 0; p <= max_sector; ++p)
        v.sector(p) = random_vector(rng, static_cast<Eigen::Index>(space->sector_size(p)));
    return v;
}

double fock_ccr(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto space = random_fock(rng);
        const auto d = static_cast<Eigen::Index>(space->dim());
        const auto f = random_vector(rng, d), g = random_vector(rng, d);
        const auto chi = random_fock_vector(rng, space, space->cutoff() - 1);
        const FockVector lhs = annihilate(f, create(g, chi)) - create(g, annihilate(f, chi));
        w(norm(lhs - f.dot(g) * chi) / std::max(1.0, f.norm() * g.norm() * norm(chi)));
        // [a(f), a(g)] = 0 and N = sum a+(e_i) a(e_i)
        w(norm(annihilate(f, annihilate(g, chi)) - annihilate(g, annihilate(f, chi))) /
          std::max(1.0, f.norm() * g.norm() * norm(chi)));
        const auto full = random_fock_vector(rng, space, space->cutoff());
        FockVector sum(space);
        for (Eigen::Index j = 0; j < d; ++j) {
            const Eigen::VectorXcd e = Eigen::VectorXcd::Unit(d, j);
            sum = sum + create(e, annihilate(e, full));
        }
        w(norm(sum - number(full)) / std::max(1.0, norm(full)));
    }
    return w.v;
}

double fock_second_quantization(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto space = random_fock(rng);
        const auto d = static_cast<Eigen::Index>(space->dim());
        const auto U = random_unitary(rng, d), V = random_unitary(rng, d);
        auto gamma = [&](const Eigen::MatrixXcd& M) {
            return operator_matrix(space, [&](const FockVector& x) { return second_quantize(M, x); });
        };
        const auto GU = gamma(U), GV = gamma(V);
        const auto n = static_cast<Eigen::Index>(space->total_size());
        w((GU.adjoint() * GU - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
        w((gamma(U * V) - GU * GV).cwiseAbs().maxCoeff());
        const auto phi = random_vector(rng, d);
        const auto Aphi = operator_matrix(space, [&](const FockVector& x) { return create(phi, x); });
        const auto AUphi = operator_matrix(space, [&](const FockVector& x) { return create(U * phi, x); });
        w((GU * Aphi * GU.adjoint() - AUphi).cwiseAbs().maxCoeff() / std::max(1.0, phi.norm()));
        // exp(i Phi) on the vacuum sector block is unitary
        const auto W = weyl_operator(space, phi);
        w((W.adjoint() * W - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    return w.v;
}

double fock_duality_swap(Rng& rng, const VerifyOptions& o) {
    Worst w;
    for (int i = 0; i < n_of(o); ++i) {
        const auto h = static_cast<std::size_t>(rng.integer(1, 2));
        const auto space = std::make_shared<const FockSpace>(2 * h, static_cast<std::size_t>(rng.integer(1, 3)));
        const int k = static_cast<int>(rng.integer(1, 4));
        const double s = (k * k) % 2 == 0 ? -1.0 : 1.0;
        const auto V = duality_one_particle(2 * h, k);
        // |n, m> -> s^{|m|} |m, n>
        for (std::size_t p = 0; p <= space->cutoff(); ++p)
            for (const auto& occ : space->basis(p)) {
                Occupation swapped(2 * h);
                int mtot = 0;
                for (std::size_t j = 0; j < h; ++j) {
                    swapped[j] = occ[h + j];
                    swapped[h + j] = occ[j];
                    mtot += occ[h + j];
                }
                const FockVector out = second_quantize(V, basis_state(space, occ));
                const Complex c = (mtot % 2 == 0) ? 1.0 : s;
                w(norm(out - c * basis_state(space, swapped)));
            }
    }
    return w.v;
}

std::vector<Check> registry() {
    std::vector<Check> c;
    auto add = [&c](std::string g, std::string n, std::string r, std::function<double(const Tolerances&)> t,
                    std::function<double(Rng&, const VerifyOptions&)> f) {
        c.push_back({std::move(g), std::move(n), std::move(r), std::move(t), std::move(f)});
    };
    add("core_numerics", "torus_periodicity", "R/Z: x and x + n agree", eps_linear, torus_periodicity);
    add("core_numerics", "torus_group_laws", "R/Z is an abelian group, Z acts linearly", eps_linear,
        torus_group_laws);
    add("character_s1", "sigma_antisymmetry", "sigma(h,h') = -sigma(h',h), sigma(h,h) = 0", eps_torus,
        sigma_antisymmetry);
    add("character_s1", "sigma_z_bilinearity", "sigma is Z-bilinear in each slot", eps_torus, sigma_bilinearity);
    add("character_s1", "sigma_dynamical_is_tau_u", "sigma on dynamical data = 2 pi k mode sum", eps_torus,
        sigma_dynamical_reduction);
    add("character_s1", "sigma_quadrature_oracle", "mode sum = int phi dphi~' + phi~ dphi' at t = 0",
        eps_quadrature, sigma_quadrature_oracle);
    add("character_s1", "sigma_topological_is_tau_lr", "sigma on flat characters = tau_lr", eps_torus,
        sigma_topological_reduction);
    add("character_s1", "curvature_closed_and_dual", "curv(h) closed, curv(h~) = *curv(h), class (n, n~)",
        eps_linear, curvature_closed_and_dual);
    add("character_s1", "sector_decomposition", "h = topological part + dynamical part", eps_linear,
        sector_decomposition);
    add("weyl_algebra", "weyl_laws_characters", "W(g)W(h) = e^{2 pi i sigma} W(g+h), *, unit, norm",
        eps_linear, weyl_character);
    add("weyl_algebra", "weyl_laws_dynamical", "Weyl relations over (dynamical data, tau_u)", eps_linear,
        weyl_dynamical);
    add("weyl_algebra", "weyl_laws_topological", "Weyl relations over (topological data, tau_lr)", eps_linear,
        weyl_topological);
    add("hadamard_dynamical", "state_point_values", "omega(0) = 1, e^{-pi/2}, general e^{-1/4}", eps_linear,
        state_point_values);
    add("hadamard_dynamical", "mu_symmetric_psd", "mu symmetric, bilinear, mu(d,d) >= 0, omega = e^{-mu/2}",
        eps_linear, mu_symmetric_psd);
    add("hadamard_dynamical", "two_point_split", "tau_C = mu i + tau_u / 2, w2 = mu + i tau_u / 2", eps_linear,
        tau_complex_split);
    add("hadamard_dynamical", "cauchy_schwarz", "|tau_u| / 2 <= mu(d,d)^1/2 mu(d',d')^1/2, both sectors",
        eps_linear, cauchy_schwarz);
    add("hadamard_dynamical", "purity_saturation", "per-mode maximizer saturates the bound", fixed(1e-9), purity);
    add("hadamard_dynamical", "state_invariance", "omega invariant under zeta and (s, phi) translations",
        eps_linear, invariance);
    add("hadamard_dynamical", "zeta_translation_commute", "zeta commutes with translations", eps_linear,
        zeta_translation_commute);
    add("hadamard_dynamical", "ground_state_certificate", "w2(d, beta_t d') has no nonpositive frequencies",
        fixed(1e-8), ground_state);
    add("hadamard_dynamical", "propagator_conjugation", "real forms: d+ = -conj(c-), d- = -conj(c+)",
        eps_linear, propagator_conjugation);
    add("hadamard_dynamical", "propagator_kernel", "kernel quadrature = mu~ + i sigma~ / 2", fixed(1e-5),
        propagator_kernel);
    add("topological_sector", "tau_lr_form", "tau_lr alternating and bilinear", eps_torus, tau_lr_form);
    add("topological_sector", "topological_positivity", "omega_t(a*a) grouped sum, omega_t0 faithful",
        fixed(1e-9), topological_positivity);
    add("topological_sector", "gns_reconstruction", "<Psi|pi(a) Psi> = omega_t(a), pi multiplicative",
        eps_linear, gns_reconstruction);
    add("topological_sector", "gns_well_defined", "Gelfand ideal maps to zero", eps_linear, gns_well_defined);
    add("topological_sector", "translations_rotations", "T shifts kets, R acts by a phase", eps_linear,
        translation_and_rotation);
    add("topological_sector", "duality_unitary", "U unitary, U Pi = Pi~ U, U R = R~ U", eps_linear,
        duality_unitary);
    add("mode_solver", "general_state_forms", "mu_general symmetric psd, tau antisymmetric", eps_linear,
        mode_mu_general);
    add("mode_solver", "duality_equation_fd", "f'' = -lambda^2 f, f = +-g', f' = +-lambda^2 g", fixed(1e-4),
        mode_fd_residual);
    add("mode_solver", "initial_data_energy", "t = 0 data exact, energy conserved on [0, 10]", fixed(1e-10),
        mode_initial_energy);
    add("mode_solver", "circle_bridge", "circle eigenbasis reproduces mu, omega, tau_u and phi", fixed(1e-9),
        mode_circle_bridge);
    add("splittings", "general_correction", "u = -<I h~', h> makes the pairing integral", fixed(1e-9),
        splitting_general);
    add("splittings", "self_dual_correction_even_k", "u_j^(i) = -c_ij / 2, k even", fixed(1e-9),
        [](Rng& r, const VerifyOptions& o) { return splitting_self_dual(r, o, 0); });
    add("splittings", "self_dual_correction_odd_k", "u_j^(i) = -c_ij / 2, k odd", fixed(1e-9),
        [](Rng& r, const VerifyOptions& o) { return splitting_self_dual(r, o, 1); });
    add("splittings", "orthogonality", "a, b corrections make the splitting orthogonal", eps_torus,
        splitting_orthogonality);
    add("cohomology_tables", "kunneth_table", "H^2 ranks of S1xS2, T3, S3 are 1, 3, 0", fixed(0.0),
        kunneth_table);
    add("cohomology_tables", "poincare_duality", "b_j = b_{dim-j}, total rank 2^factors", fixed(0.0),
        poincare_duality);
    add("fock_space", "ccr", "[a(f), a+(g)] = <f,g>, N = sum a+ a", fixed(1e-10), fock_ccr);
    add("fock_space", "second_quantization", "Gamma(U) unitary, multiplicative, intertwines a+", fixed(1e-10),
        fock_second_quantization);
    add("fock_space", "duality_block_swap", "Gamma(V~) |n, m> = s^|m| |m, n>", fixed(1e-10), fock_duality_swap);
    return c;
}

std::uint64_t check_seed(std::uint64_t seed, std::size_t index) {
    // splitmix64 so neighbouring checks get unrelated streams
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

bool RunReport::all_pass() const { return failures() == 0; }

std::size_t RunReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::vector<std::string> verification_check_names() {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.group + "/" + c.name);
    return out;
}

RunReport run_verification(const VerifyOptions& opt) {
    opt.tol.validate();
    if (opt.samples < 1) throw std::invalid_argument("verify: samples must be positive");
    RunReport report;
    report.seed = opt.seed;
    report.samples = opt.samples;
    const auto checks = registry();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        CheckResult r;
        r.group = c.group;
        r.name = c.name;
        r.reference = c.reference;
        r.tolerance = c.tolerance(opt.tol);
        Rng rng(check_seed(opt.seed, i));
        const auto start = std::chrono::steady_clock::now();
        try {
            r.residual = c.run(rng, opt);
            r.pass = std::isfinite(r.residual) && r.residual <= r.tolerance;
        } catch (const std::exception& e) {
            r.residual = std::numeric_limits<double>::infinity();
            r.pass = false;
            r.error = e.what();
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(r));
    }
    return report;
}

std::string format_report(const RunReport& report, bool timings) {
    std::ostringstream os;
    os << "verify-all seed=" << report.seed << " samples=" << report.samples << "\n";
    for (const auto& c : report.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.group << "/" << c.name << "  residual=" << fmt(c.residual)
           << " tol=" << fmt(c.tolerance);
        if (timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", c.elapsed_ms);
            os << " time=" << buf << "ms";
        }
        os << "  (" << c.reference << ")";
        if (!c.error.empty()) os << "  error: " << c.error;
        os << "\n";
    }
    os << (report.all_pass() ? "all " + std::to_string(report.checks.size()) + " checks passed"
                             : std::to_string(report.failures()) + " of " + std::to_string(report.checks.size()) +
                                   " checks failed")
       << "\n";
    return os.str();
}

Json report_to_json(const RunReport& report, bool timings) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json j{{"group", c.group},
               {"name", c.name},
               {"reference", c.reference},
               {"status", c.pass ? "pass" : "fail"},
               {"residual", std::isfinite(c.residual) ? Json(c.residual) : Json(nullptr)},
               {"tolerance", c.tolerance}};
        if (timings) j["elapsed_ms"] = c.elapsed_ms;
        if (!c.error.empty()) j["error"] = c.error;
        checks.push_back(std::move(j));
    }
    return Json{{"seed", report.seed},
                {"samples", report.samples},
                {"all_pass", report.all_pass()},
                {"checks", std::move(checks)}};
}

}  // namespace dcqft
