#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcqft/core_numerics.hpp"
#include "dcqft/topological_sector.hpp"
#include "dcqft/weyl_algebra.hpp"

namespace dcqft {

// Coefficients of one Fourier mode k of the field on R x S^1, one (a, b) pair
// per chirality: the minus chirality moves along t - theta, the plus along t + theta.
struct ChiralMode {
    int k = 1;
    double a_plus = 0.0;
    double a_minus = 0.0;
    double b_plus = 0.0;
    double b_minus = 0.0;

    bool is_zero() const { return a_plus == 0.0 && a_minus == 0.0 && b_plus == 0.0 && b_minus == 0.0; }
    bool operator==(const ChiralMode&) const = default;
};

using ModeList = std::vector<ChiralMode>;

// Throws unless every k >= 1, k strictly increasing, and all coefficients finite.
void validate_modes(const ModeList& modes);
// Sorts by k; duplicate k is an error.
ModeList sorted_modes(ModeList modes);
int max_mode(const ModeList& modes);

struct DynamicalDatum {
    ModeList modes;
    bool operator==(const DynamicalDatum&) const = default;
};

DynamicalDatum make_datum(ModeList modes);
DynamicalDatum operator+(const DynamicalDatum& a, const DynamicalDatum& b);
DynamicalDatum operator-(const DynamicalDatum& a);
DynamicalDatum operator-(const DynamicalDatum& a, const DynamicalDatum& b);
DynamicalDatum operator*(double s, const DynamicalDatum& a);

struct FourierCharacter {
    TorusValue h0;
    TorusValue ht0;
    std::int64_t n = 0;
    std::int64_t nt = 0;
    ModeList modes;
};

FourierCharacter operator+(const FourierCharacter& a, const FourierCharacter& b);
FourierCharacter operator-(const FourierCharacter& a);

// phi and its dual partner from the mode coefficients.
double phi(const DynamicalDatum& d, double t, double theta);
double phi_tilde(const DynamicalDatum& d, double t, double theta);

// Real lifts of h and h~ at (t, theta): h0 + n theta - nt t + phi, ht0 + nt theta - n t + phi~.
double field_lift(const FourierCharacter& h, double t, double theta);
double dual_field_lift(const FourierCharacter& h, double t, double theta);

// sum s- sin x- + s+ sin x+ + c- cos x- + c+ cos x+ with x-+ = 2 pi k (t -+ theta)
struct TrigCoefficients {
    double sin_minus = 0.0;
    double sin_plus = 0.0;
    double cos_minus = 0.0;
    double cos_plus = 0.0;
};

struct CurvatureMode {
    int k = 1;
    TrigCoefficients dt;
    TrigCoefficients dtheta;
};

// A one-form F_t dt + F_theta dtheta with constant part (harmonic_dt, harmonic_dtheta).
// Mode coefficients already include the 2 pi k factor.
struct CurvatureData {
    std::int64_t harmonic_dt = 0;
    std::int64_t harmonic_dtheta = 0;
    std::vector<CurvatureMode> modes;
};

CurvatureData curvature(const FourierCharacter& h);
CurvatureData curvature_dual(const FourierCharacter& h);
// *dtheta = -dt, *dt = -dtheta
CurvatureData hodge_star(const CurvatureData& c);
std::pair<double, double> evaluate_form(const CurvatureData& c, double t, double theta);
// Largest coefficient of dF on the dt ^ dtheta basis; zero for closed forms.
double exterior_derivative_residual(const CurvatureData& c);
double curvature_distance(const CurvatureData& a, const CurvatureData& b);

std::pair<std::int64_t, std::int64_t> characteristic_class(const FourierCharacter& h);

struct RestrictedMode {
    int k = 1;
    double cos_h = 0.0;
    double sin_h = 0.0;
    double cos_ht = 0.0;
    double sin_ht = 0.0;
};

struct CauchyRestriction {
    TorusValue h0;
    TorusValue ht0;
    std::int64_t n = 0;
    std::int64_t nt = 0;
    std::vector<RestrictedMode> modes;
};

CauchyRestriction restrict_to_cauchy(const FourierCharacter& h);

// Topological part lives in the rank-1 model with k = 1, m = 2.
TopologicalModel circle_topological_model();

struct SectorDecomposition {
    TopologicalElement topological;
    DynamicalDatum dynamical;
};

SectorDecomposition decompose(const FourierCharacter& h);
FourierCharacter recompose(const TopologicalElement& x, const DynamicalDatum& d);

double tau_u(const DynamicalDatum& d, const DynamicalDatum& dp);
TorusValue sigma(const FourierCharacter& h, const FourierCharacter& hp);

// Trapezoidal quadrature of int_0^1 phi dphi~' + phi~ dphi' over theta at t = 0.
double sigma_quadrature_real(const DynamicalDatum& d, const DynamicalDatum& dp, int n_points);
TorusValue sigma_quadrature(const DynamicalDatum& d, const DynamicalDatum& dp, int n_points);

WeylKey mode_key(const ModeList& modes);
std::string describe_modes(const ModeList& modes);

class CharacterModel {
public:
    using Element = FourierCharacter;
    FourierCharacter zero() const { return {}; }
    FourierCharacter add(const FourierCharacter& a, const FourierCharacter& b) const { return a + b; }
    FourierCharacter negate(const FourierCharacter& a) const { return -a; }
    TorusValue presymplectic(const FourierCharacter& a, const FourierCharacter& b) const { return sigma(a, b); }
    WeylKey key(const FourierCharacter& a) const;
    std::string describe(const FourierCharacter& a) const;
    void validate(const FourierCharacter& a) const { validate_modes(a.modes); }
    bool operator==(const CharacterModel&) const = default;
};

class DynamicalModel {
public:
    using Element = DynamicalDatum;
    DynamicalDatum zero() const { return {}; }
    DynamicalDatum add(const DynamicalDatum& a, const DynamicalDatum& b) const { return a + b; }
    DynamicalDatum negate(const DynamicalDatum& a) const { return -a; }
    TorusValue presymplectic(const DynamicalDatum& a, const DynamicalDatum& b) const {
        return torus_from_real(tau_u(a, b));
    }
    WeylKey key(const DynamicalDatum& a) const { return mode_key(a.modes); }
    std::string describe(const DynamicalDatum& a) const { return describe_modes(a.modes); }
    void validate(const DynamicalDatum& a) const { validate_modes(a.modes); }
    bool operator==(const DynamicalModel&) const = default;
};

}  // namespace dcqft
