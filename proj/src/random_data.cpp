#include "dcqft/random_data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dcqft {

double Rng::normal() {
    // Box-Muller on the engine's own uniforms
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ModeList random_modes(Rng& rng, const ModeSampling& opt) {
    std::vector<int> ks(static_cast<std::size_t>(opt.kmax));
    for (int i = 0; i < opt.kmax; ++i) ks[static_cast<std::size_t>(i)] = i + 1;
    // partial Fisher-Yates for a random subset of mode numbers
    const auto count = rng.integer(0, std::min(opt.max_modes, opt.kmax));
    for (std::int64_t i = 0; i < count; ++i) {
        const auto j = rng.integer(i, opt.kmax - 1);
        std::swap(ks[static_cast<std::size_t>(i)], ks[static_cast<std::size_t>(j)]);
    }
    auto coef = [&]() { return opt.dyadic ? rng.dyadic(opt.amplitude) : rng.uniform(-opt.amplitude, opt.amplitude); };
    ModeList modes;
    for (std::int64_t i = 0; i < count; ++i) {
        ChiralMode m;
        m.k = ks[static_cast<std::size_t>(i)];
        m.a_plus = coef();
        m.a_minus = coef();
        m.b_plus = coef();
        m.b_minus = coef();
        if (!m.is_zero()) modes.push_back(m);
    }
    return sorted_modes(std::move(modes));
}

DynamicalDatum random_datum(Rng& rng, const ModeSampling& opt) { return DynamicalDatum{random_modes(rng, opt)}; }

DynamicalDatum random_nonzero_datum(Rng& rng, const ModeSampling& opt) {
    for (;;) {
        DynamicalDatum d = random_datum(rng, opt);
        if (!d.modes.empty()) return d;
    }
}

FourierCharacter random_character(Rng& rng, const ModeSampling& opt) {
    FourierCharacter h = random_topological_character(rng, opt.dyadic);
    h.modes = random_modes(rng, opt);
    return h;
}

FourierCharacter random_topological_character(Rng& rng, bool dyadic) {
    FourierCharacter h;
    h.h0 = torus_from_real(dyadic ? rng.dyadic() : rng.uniform());
    h.ht0 = torus_from_real(dyadic ? rng.dyadic() : rng.uniform());
    h.n = rng.integer(-5, 5);
    h.nt = rng.integer(-5, 5);
    return h;
}

TopologicalElement random_topological(Rng& rng, const TopologicalModel& model, bool dyadic, int vmax) {
    TopologicalElement x = model.zero();
    for (auto& a : x.u) a = torus_from_real(dyadic ? rng.dyadic() : rng.uniform());
    for (auto& a : x.ut) a = torus_from_real(dyadic ? rng.dyadic() : rng.uniform());
    for (auto& a : x.v) a = rng.integer(-vmax, vmax);
    for (auto& a : x.vt) a = rng.integer(-vmax, vmax);
    return x;
}

GnsVector random_gns_vector(Rng& rng, const TopologicalModel& model, int terms, int vmax) {
    GnsVector psi;
    const auto n = rng.integer(1, terms);
    for (std::int64_t t = 0; t < n; ++t) {
        IntVector v(model.n()), vt(model.n_tilde());
        for (auto& a : v) a = rng.integer(-vmax, vmax);
        for (auto& a : vt) a = rng.integer(-vmax, vmax);
        psi.add(LatticeKet{v, vt}, random_complex(rng));
    }
    return psi;
}

Complex random_complex(Rng& rng, bool dyadic) {
    if (dyadic) return {rng.dyadic(), rng.dyadic()};
    return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

ModeSpectrum random_spectrum(Rng& rng, int k, int m, int max_entries, double lambda_max) {
    ModeSpectrum s;
    s.k = k;
    s.m = m;
    const auto count = rng.integer(1, max_entries);
    std::vector<double> lams;
    for (std::int64_t i = 0; i < count; ++i) lams.push_back(rng.uniform(0.5, lambda_max));
    std::sort(lams.begin(), lams.end());
    lams.erase(std::unique(lams.begin(), lams.end()), lams.end());
    for (double l : lams) s.entries.push_back({l, static_cast<int>(rng.integer(1, 3))});
    return s;
}

ModeInitialData random_initial_data(Rng& rng, const ModeSpectrum& s) {
    ModeInitialData d;
    for (std::size_t i = 0; i < s.slot_count(); ++i) d.slots.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    return d;
}

SplittingModel random_splitting_model(Rng& rng, SplittingCase kind, int k, std::size_t max_rank) {
    SplittingModel model;
    model.kind = kind;
    model.k = k;
    model.n = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(max_rank)));
    if (kind == SplittingCase::general) {
        model.m = k + static_cast<int>(rng.integer(0, 3));
        model.n_tilde = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(max_rank)));
        model.lifts = Eigen::MatrixXd(static_cast<Eigen::Index>(model.n), static_cast<Eigen::Index>(model.n_tilde));
        for (Eigen::Index i = 0; i < model.lifts.rows(); ++i)
            for (Eigen::Index j = 0; j < model.lifts.cols(); ++j) model.lifts(i, j) = rng.uniform(-3.0, 3.0);
        return model;
    }
    model.m = 2 * k;
    model.n_tilde = model.n;
    const auto n = static_cast<Eigen::Index>(model.n);
    const double s = k % 2 == 0 ? 1.0 : -1.0;
    model.lifts = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        // odd k: the diagonal pairing vanishes mod 1, so any integer lift is allowed
        model.lifts(i, i) = s > 0 ? rng.uniform(-3.0, 3.0) : static_cast<double>(rng.integer(-2, 2));
        for (Eigen::Index j = i + 1; j < n; ++j) {
            model.lifts(i, j) = rng.uniform(-3.0, 3.0);
            // lower triangle: a different lift of the same torus value
            model.lifts(j, i) = s * model.lifts(i, j) + static_cast<double>(rng.integer(-2, 2));
        }
    }
    return model;
}

Eigen::VectorXcd random_vector(Rng& rng, Eigen::Index d) {
    Eigen::VectorXcd v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(rng.normal(), rng.normal());
    return v;
}

Eigen::MatrixXcd random_unitary(Rng& rng, Eigen::Index d) {
    Eigen::MatrixXcd g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
    return q;
}

TestFormComponent bump_component(int s, int k, TestFormComponent::Basis basis, double center, double half_width,
                                 int n, Complex scale) {
    TestFormComponent c;
    c.s = s;
    c.k = k;
    c.basis = basis;
    c.dt = 2.0 * half_width / (n - 1);
    c.t0 = center - half_width - c.dt;
    for (int j = 0; j < n + 2; ++j) {
        const double x = (c.t0 + j * c.dt - center) / half_width;
        const double g = std::fabs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0;
        c.samples.push_back(scale * g);
    }
    return c;
}

TestForm random_bump_form(Rng& rng, int kmax, int n) {
    TestForm f;
    const auto count = rng.integer(1, 3);
    for (std::int64_t i = 0; i < count; ++i) {
        const int s = static_cast<int>(rng.integer(0, 1));
        const int k = static_cast<int>(rng.integer(1, kmax));
        const auto basis = rng.integer(0, 1) == 0 ? TestFormComponent::Basis::cos : TestFormComponent::Basis::sin;
        f.components.push_back(bump_component(s, k, basis, rng.uniform(-0.5, 0.5), rng.uniform(0.2, 0.6), n,
                                              rng.uniform(0.5, 2.0)));
    }
    return f;
}

}  // namespace dcqft
