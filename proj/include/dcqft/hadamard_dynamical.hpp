#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dcqft/character_s1.hpp"
#include "dcqft/core_numerics.hpp"

namespace dcqft {

// Coefficients of e^{-2 pi i k (t - theta)} (minus) and e^{-2 pi i k (t + theta)} (plus)
// in the expansion of phi; phi = 2 Re of the sum.
struct PositiveFrequencyMode {
    int k = 1;
    Complex minus;
    Complex plus;
};

struct PositiveFrequencyData {
    std::vector<PositiveFrequencyMode> modes;
};

PositiveFrequencyData project_positive(const DynamicalDatum& d);
// Inverse on the image: the real datum whose projection is p.
DynamicalDatum real_datum(const PositiveFrequencyData& p);
// theta-quadrature at t = 0 of conj(P phi~) dP phi' + conj(P phi) dP phi~'.
Complex tau_complex(const PositiveFrequencyData& p, const PositiveFrequencyData& pp, int n_points);

double mu(const DynamicalDatum& d, const DynamicalDatum& dp);
double omega_mu(const DynamicalDatum& d);
Complex two_point(const DynamicalDatum& d, const DynamicalDatum& dp);
bool cs_inequality(const DynamicalDatum& d, const DynamicalDatum& dp, double slack = 1e-12);

// (a, b) -> (b, -a) in every mode and chirality.
DynamicalDatum purity_maximizer(const DynamicalDatum& d);
// Field shifted to (t + s, theta + phi0).
DynamicalDatum symmetry_translate(const DynamicalDatum& d, double s, TorusValue phi0);
DynamicalDatum duality_zeta_u(const DynamicalDatum& d);

// Fraction of spectral energy of t -> two_point(d, translate(dp, t)) at frequencies <= 0,
// where e^{+2 pi i E t} carries frequency E. DC is excluded.
double ground_state_certificate(const DynamicalDatum& d, const DynamicalDatum& dp, int n_samples);

// One component g(t) b(theta) of a test form psi_s; b is e^{2 pi i k theta}, or the real
// cos / sin of 2 pi k theta.
struct TestFormComponent {
    enum class Basis { exp, cos, sin };
    int s = 0;
    int k = 1;
    Basis basis = Basis::exp;
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<Complex> samples;
};

struct TestForm {
    std::vector<TestFormComponent> components;
};

struct PropagatorCoefficients {
    Complex c_plus;
    Complex c_minus;
    Complex d_plus;
    Complex d_minus;
};

struct TestFormModeData {
    // k >= 1 -> coefficients for s = 0, 1
    std::map<int, std::array<PropagatorCoefficients, 2>> modes;
};

TestFormModeData propagator_coefficients(const TestForm& psi, double boundary_tol = 1e-12);

// sum over k, s of 1/(4 pi k) (conj(d~+) d+ + conj(d~-) d-)
Complex two_point_tilde(const TestFormModeData& a, const TestFormModeData& b);
double mu_tilde(const TestFormModeData& a, const TestFormModeData& b);
double sigma_tilde(const TestFormModeData& a, const TestFormModeData& b);

Complex two_point_kernel_oracle(const TestForm& psi_tilde, const TestForm& psi, int n_theta);

}  // namespace dcqft
