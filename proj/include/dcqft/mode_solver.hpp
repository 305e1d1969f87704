#pragma once

#include <utility>
#include <vector>

#include "dcqft/character_s1.hpp"

namespace dcqft {

struct SpectrumEntry {
    double lambda = 1.0;
    int multiplicity = 1;
};

struct ModeSpectrum {
    int m = 2;
    int k = 1;
    std::vector<SpectrumEntry> entries;

    // (-1)^{k(m-k)}
    int epsilon() const;
    std::size_t slot_count() const;
    std::vector<double> slot_lambdas() const;
    void validate() const;
};

struct SlotData {
    double alpha = 0.0;
    double alpha_tilde = 0.0;
};

struct ModeInitialData {
    std::vector<SlotData> slots;
};

struct SlotTrajectory {
    double lambda = 1.0;
    double alpha = 0.0;
    double alpha_tilde = 0.0;
};

class ModeSolution {
public:
    ModeSolution(int k, int m, std::vector<SlotTrajectory> slots);

    int k() const { return k_; }
    int m() const { return m_; }
    int epsilon() const { return epsilon_; }
    const std::vector<SlotTrajectory>& slots() const { return slots_; }

    // f_i = (alpha cos(lambda t) + eps alpha~ sin(lambda t)) / lambda
    double f(std::size_t i, double t) const;
    double df(std::size_t i, double t) const;
    // dual trajectory: f = (-1)^{km+1} g', f' = (-1)^{km} lambda^2 g
    double g(std::size_t i, double t) const;
    double dg(std::size_t i, double t) const;
    // sum lambda (f^2 + (f'/lambda)^2) / 2
    double energy(double t) const;

private:
    int k_;
    int m_;
    int epsilon_;
    std::vector<SlotTrajectory> slots_;
};

ModeSolution solve_cauchy(const ModeSpectrum& s, const ModeInitialData& d);
double verify_duality_equation(const ModeSolution& sol, double t, double h = 1e-3);

double mu_general(const ModeSpectrum& s, const ModeInitialData& d, const ModeInitialData& dp);
double omega_mu_general(const ModeSpectrum& s, const ModeInitialData& d);

// eps * sum (alpha~ alpha' - alpha alpha~') / lambda, times the bridge constant
double tau_u_general(const ModeSpectrum& s, const ModeInitialData& d, const ModeInitialData& dp);
bool cs_inequality_general(const ModeSpectrum& s, const ModeInitialData& d, const ModeInitialData& dp,
                           double slack = 1e-12);

inline constexpr double kTauBridgeConstant = 1.0;

// S^1 data on the circle Laplacian eigenbasis sqrt(2) cos, sqrt(2) sin with lambda = 2 pi k,
// k = 1..kmax, two slots per k.
struct CircleBridge {
    ModeSpectrum spectrum;
    ModeInitialData data;
};

CircleBridge circle_bridge(const DynamicalDatum& d, int kmax);
// Least-squares ratio of tau_u on the circle to the uncalibrated general form over the pairs.
double calibrate_tau_bridge(const std::vector<std::pair<DynamicalDatum, DynamicalDatum>>& pairs);

}  // namespace dcqft
