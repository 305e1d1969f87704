#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

#include "dcqft/character_s1.hpp"
#include "dcqft/hadamard_dynamical.hpp"
#include "dcqft/mode_solver.hpp"
#include "dcqft/splittings.hpp"
#include "dcqft/topological_sector.hpp"
#include "dcqft/weyl_algebra.hpp"

namespace dcqft {

// Engine-only sampling, so sequences do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    // j / 64 for integer j in [-64 * r, 64 * r]; sums of these are exact
    double dyadic(double r = 1.0) {
        const auto lim = static_cast<std::int64_t>(64.0 * r);
        return static_cast<double>(integer(-lim, lim)) / 64.0;
    }
    double normal();

private:
    std::mt19937_64 engine_;
};

struct ModeSampling {
    int max_modes = 8;
    int kmax = 8;
    double amplitude = 1.0;
    bool dyadic = false;
};

ModeList random_modes(Rng& rng, const ModeSampling& opt = {});
DynamicalDatum random_datum(Rng& rng, const ModeSampling& opt = {});
DynamicalDatum random_nonzero_datum(Rng& rng, const ModeSampling& opt = {});
FourierCharacter random_character(Rng& rng, const ModeSampling& opt = {});
FourierCharacter random_topological_character(Rng& rng, bool dyadic = false);

TopologicalElement random_topological(Rng& rng, const TopologicalModel& model, bool dyadic = false, int vmax = 3);
GnsVector random_gns_vector(Rng& rng, const TopologicalModel& model, int terms = 4, int vmax = 3);

Complex random_complex(Rng& rng, bool dyadic = false);

template <GroupModel M, class Gen>
WeylElement<M> random_weyl(Rng& rng, const M& model, Gen gen, int max_terms, bool dyadic = false) {
    WeylElement<M> a(model);
    const auto n = rng.integer(1, max_terms);
    for (std::int64_t i = 0; i < n; ++i) a.add_term(gen(), random_complex(rng, dyadic));
    return a;
}

ModeSpectrum random_spectrum(Rng& rng, int k, int m, int max_entries = 5, double lambda_max = 5.0);
ModeInitialData random_initial_data(Rng& rng, const ModeSpectrum& s);

SplittingModel random_splitting_model(Rng& rng, SplittingCase kind, int k, std::size_t max_rank = 6);

Eigen::VectorXcd random_vector(Rng& rng, Eigen::Index d);
// Haar-like unitary from the QR factorization of a Gaussian matrix.
Eigen::MatrixXcd random_unitary(Rng& rng, Eigen::Index d);

// Smooth bump exp(-1/(1-x^2)) on [center - half_width, center + half_width], sampled on
// n points of a grid that extends one step past the support on each side.
TestFormComponent bump_component(int s, int k, TestFormComponent::Basis basis, double center, double half_width,
                                 int n, Complex scale = 1.0);
TestForm random_bump_form(Rng& rng, int kmax = 3, int n = 48);

}  // namespace dcqft
