#include "dcqft/mode_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcqft {

namespace {

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

void check_lengths(const ModeSpectrum& s, const ModeInitialData& d) {
    if (d.slots.size() != s.slot_count()) throw std::invalid_argument("initial data length does not match spectrum");
    for (const auto& x : d.slots)
        if (!std::isfinite(x.alpha) || !std::isfinite(x.alpha_tilde))
            throw std::invalid_argument("non-finite initial data");
}

double raw_tau(const ModeSpectrum& s, const ModeInitialData& d, const ModeInitialData& dp) {
    const auto lam = s.slot_lambdas();
    double sum = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i)
        sum += (d.slots[i].alpha_tilde * dp.slots[i].alpha - d.slots[i].alpha * dp.slots[i].alpha_tilde) / lam[i];
    return s.epsilon() * sum;
}

}  // namespace

int ModeSpectrum::epsilon() const { return sign_pow(static_cast<long>(k) * (m - k)); }

std::size_t ModeSpectrum::slot_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += static_cast<std::size_t>(std::max(0, e.multiplicity));
    return n;
}

std::vector<double> ModeSpectrum::slot_lambdas() const {
    std::vector<double> out;
    for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(std::max(0, e.multiplicity)), e.lambda);
    return out;
}

void ModeSpectrum::validate() const {
    if (k < 0 || m < k) throw std::invalid_argument("spectrum: need 0 <= k <= m");
    double prev = 0.0;
    for (const auto& e : entries) {
        if (!(e.lambda > 0.0) || !std::isfinite(e.lambda)) throw std::invalid_argument("spectrum: eigenvalues must be positive");
        if (e.multiplicity < 1) throw std::invalid_argument("spectrum: multiplicity must be positive");
        if (e.lambda <= prev) throw std::invalid_argument("spectrum: entries must be strictly ascending");
        prev = e.lambda;
    }
}

ModeSolution::ModeSolution(int k, int m, std::vector<SlotTrajectory> slots)
    : k_(k), m_(m), epsilon_(sign_pow(static_cast<long>(k) * (m - k))), slots_(std::move(slots)) {}

double ModeSolution::f(std::size_t i, double t) const {
    const auto& s = slots_.at(i);
    return (s.alpha * std::cos(s.lambda * t) + epsilon_ * s.alpha_tilde * std::sin(s.lambda * t)) / s.lambda;
}

double ModeSolution::df(std::size_t i, double t) const {
    const auto& s = slots_.at(i);
    return -s.alpha * std::sin(s.lambda * t) + epsilon_ * s.alpha_tilde * std::cos(s.lambda * t);
}

double ModeSolution::g(std::size_t i, double t) const {
    const auto& s = slots_.at(i);
    const double l2 = s.lambda * s.lambda;
    return (sign_pow(static_cast<long>(k_) * m_ + 1) * s.alpha * std::sin(s.lambda * t) +
            sign_pow(k_) * s.alpha_tilde * std::cos(s.lambda * t)) /
           l2;
}

double ModeSolution::dg(std::size_t i, double t) const {
    const auto& s = slots_.at(i);
    return (sign_pow(static_cast<long>(k_) * m_ + 1) * s.alpha * std::cos(s.lambda * t) -
            sign_pow(k_) * s.alpha_tilde * std::sin(s.lambda * t)) /
           s.lambda;
}

double ModeSolution::energy(double t) const {
    double e = 0.0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const double l = slots_[i].lambda;
        const double fi = f(i, t), dfi = df(i, t) / l;
        e += 0.5 * l * (fi * fi + dfi * dfi);
    }
    return e;
}

ModeSolution solve_cauchy(const ModeSpectrum& s, const ModeInitialData& d) {
    s.validate();
    check_lengths(s, d);
    const auto lam = s.slot_lambdas();
    std::vector<SlotTrajectory> slots;
    slots.reserve(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) slots.push_back({lam[i], d.slots[i].alpha, d.slots[i].alpha_tilde});
    return ModeSolution(s.k, s.m, std::move(slots));
}

double verify_duality_equation(const ModeSolution& sol, double t, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("verify_duality_equation: step must be positive");
    const int c1 = sign_pow(static_cast<long>(sol.k()) * sol.m() + 1);
    const int c2 = sign_pow(static_cast<long>(sol.k()) * sol.m());
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.slots().size(); ++i) {
        const double l = sol.slots()[i].lambda;
        const double fm = sol.f(i, t - h), f0 = sol.f(i, t), fp = sol.f(i, t + h);
        const double fpp = (fp - 2.0 * f0 + fm) / (h * h);
        const double fd = (fp - fm) / (2.0 * h);
        const double gd = (sol.g(i, t + h) - sol.g(i, t - h)) / (2.0 * h);
        worst = std::max({worst, std::fabs(fpp + l * l * f0), std::fabs(f0 - c1 * gd),
                          std::fabs(fd - c2 * l * l * sol.g(i, t))});
    }
    return worst;
}

double mu_general(const ModeSpectrum& s, const ModeInitialData& d, const ModeInitialData& dp) {
    s.validate();
    check_lengths(s, d);
    check_lengths(s, dp);
    const auto lam = s.slot_lambdas();
    double sum = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i)
        sum += (d.slots[i].alpha * dp.slots[i].alpha + d.slots[i].alpha_tilde * dp.slots[i].alpha_tilde) /
               (2.0 * lam[i]);
    return sum;
}

double omega_mu_general(const ModeSpectrum& s, const ModeInitialData& d) {
    return std::exp(-0.5 * mu_general(s, d, d));
}

double tau_u_general(const ModeSpectrum& s, const ModeInitialData& d, const ModeInitialData& dp) {
    s.validate();
    check_lengths(s, d);
    check_lengths(s, dp);
    return kTauBridgeConstant * raw_tau(s, d, dp);
}

bool cs_inequality_general(const ModeSpectrum& s, const ModeInitialData& d, const ModeInitialData& dp,
                           double slack) {
    const double lhs = 0.5 * std::fabs(tau_u_general(s, d, dp));
    const double rhs = std::sqrt(std::max(0.0, mu_general(s, d, d))) * std::sqrt(std::max(0.0, mu_general(s, dp, dp)));
    return lhs <= rhs + slack * std::max(1.0, rhs);
}

CircleBridge circle_bridge(const DynamicalDatum& d, int kmax) {
    validate_modes(d.modes);
    if (kmax < max_mode(d.modes)) throw std::invalid_argument("circle_bridge: kmax below the highest mode");
    CircleBridge b;
    b.spectrum.m = 2;
    b.spectrum.k = 1;
    const double r = 1.0 / std::numbers::sqrt2;
    std::size_t j = 0;
    for (int k = 1; k <= kmax; ++k) {
        ChiralMode mode{k, 0.0, 0.0, 0.0, 0.0};
        if (j < d.modes.size() && d.modes[j].k == k) mode = d.modes[j++];
        const double lam = 2.0 * std::numbers::pi * k;
        b.spectrum.entries.push_back({lam, 2});
        // cos slot, then sin slot
        b.data.slots.push_back({lam * r * (-mode.b_minus - mode.b_plus), lam * r * (-mode.a_plus - mode.a_minus)});
        b.data.slots.push_back({lam * r * (mode.a_plus - mode.a_minus), -lam * r * (mode.b_plus - mode.b_minus)});
    }
    return b;
}

double calibrate_tau_bridge(const std::vector<std::pair<DynamicalDatum, DynamicalDatum>>& pairs) {
    double num = 0.0, den = 0.0;
    for (const auto& [d, dp] : pairs) {
        const int kmax = std::max(max_mode(d.modes), max_mode(dp.modes));
        const CircleBridge b1 = circle_bridge(d, kmax);
        const CircleBridge b2 = circle_bridge(dp, kmax);
        const double raw = raw_tau(b1.spectrum, b1.data, b2.data);
        num += raw * tau_u(d, dp);
        den += raw * raw;
    }
    if (den == 0.0) throw std::invalid_argument("calibrate_tau_bridge: degenerate sample");
    return num / den;
}

}  // namespace dcqft
