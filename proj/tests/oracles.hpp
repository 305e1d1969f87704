#pragma once

// Test-side reference computations. Each one takes a different route from the
// library code it is compared against: sampled fields instead of mode sums,
// explicit double sums instead of grouped formulas, tensors instead of
// occupation numbers.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "dcqft/character_s1.hpp"
#include "dcqft/fock_space.hpp"
#include "dcqft/hadamard_dynamical.hpp"
#include "dcqft/topological_sector.hpp"

namespace oracle {

using dcqft::Complex;
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

struct FieldSample {
    double phi = 0.0;
    double phit = 0.0;
    double dphi = 0.0;   // d/dtheta
    double dphit = 0.0;  // d/dtheta of the dual field
};

// phi  = sum -b- cos x- - b+ cos x+ + a- sin x- + a+ sin x+
// phi~ = sum -b- cos x- + b+ cos x+ + a- sin x- - a+ sin x+,   x-+ = 2 pi k (t -+ theta)
inline FieldSample field(const dcqft::DynamicalDatum& d, double t, double th) {
    FieldSample s;
    for (const auto& m : d.modes) {
        const double w = two_pi * m.k;
        const double xm = w * (t - th), xp = w * (t + th);
        const double cm = std::cos(xm), sm = std::sin(xm), cp = std::cos(xp), sp = std::sin(xp);
        s.phi += -m.b_minus * cm - m.b_plus * cp + m.a_minus * sm + m.a_plus * sp;
        s.phit += -m.b_minus * cm + m.b_plus * cp + m.a_minus * sm - m.a_plus * sp;
        s.dphi += w * (-m.b_minus * sm + m.b_plus * sp - m.a_minus * cm + m.a_plus * cp);
        s.dphit += w * (-m.b_minus * sm - m.b_plus * sp - m.a_minus * cm - m.a_plus * cp);
    }
    return s;
}

// int_{S^1} phi dphi~' + phi~ dphi' at t = 0 by the rectangle rule on n points.
inline double sigma_quadrature(const dcqft::DynamicalDatum& d, const dcqft::DynamicalDatum& dp, int n) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = (j + 0.5) / n;
        const auto a = field(d, 0.0, th);
        const auto b = field(dp, 0.0, th);
        s += a.phi * b.dphit + a.phit * b.dphi;
    }
    return s / n;
}

inline const dcqft::ChiralMode* find_mode(const dcqft::DynamicalDatum& d, int k) {
    for (const auto& m : d.modes)
        if (m.k == k) return &m;
    return nullptr;
}

inline double tau_u(const dcqft::DynamicalDatum& d, const dcqft::DynamicalDatum& dp) {
    double s = 0.0;
    for (const auto& m : d.modes)
        if (const auto* q = find_mode(dp, m.k))
            s += two_pi * m.k *
                 (m.b_plus * q->a_plus + m.b_minus * q->a_minus - m.a_plus * q->b_plus - m.a_minus * q->b_minus);
    return s;
}

inline double mu(const dcqft::DynamicalDatum& d, const dcqft::DynamicalDatum& dp) {
    double s = 0.0;
    for (const auto& m : d.modes)
        if (const auto* q = find_mode(dp, m.k))
            s += pi * m.k *
                 (m.a_plus * q->a_plus + m.b_plus * q->b_plus + m.a_minus * q->a_minus + m.b_minus * q->b_minus);
    return s;
}

inline double frac(double x) { return x - std::floor(x); }

// n~' h0 - n h~0' + n' h~0 - n~ h0' + tau_u
inline double sigma_character(const dcqft::FourierCharacter& h, const dcqft::FourierCharacter& hp) {
    const double top = static_cast<double>(hp.nt) * h.h0.rep() - static_cast<double>(h.n) * hp.ht0.rep() +
                       static_cast<double>(hp.n) * h.ht0.rep() - static_cast<double>(h.nt) * hp.h0.rep();
    return frac(top + oracle::tau_u(dcqft::DynamicalDatum{h.modes}, dcqft::DynamicalDatum{hp.modes}));
}

inline double pair(const dcqft::TorusVector& u, const dcqft::IntVector& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i].rep() * static_cast<double>(v[i]);
    return s;
}

inline double tau_lr(const dcqft::TopologicalElement& x, const dcqft::TopologicalElement& y) {
    const int kk = x.grading.k, m = x.grading.m;
    const double eps = (kk * (m - kk)) % 2 == 0 ? 1.0 : -1.0;
    return frac(pair(x.ut, y.v) - eps * pair(x.u, y.vt) - pair(y.ut, x.v) + eps * pair(y.u, x.vt));
}

// s(a* a) expanded pair by pair: sum_ij conj(c_i) c_j e^{2 pi i tau(-g_i, g_j)} s(g_j - g_i)
template <class Model>
Complex square_expectation(const dcqft::WeylElement<Model>& a,
                           const std::function<Complex(const typename Model::Element&)>& s,
                           const std::function<double(const typename Model::Element&,
                                                      const typename Model::Element&)>& form) {
    Complex total = 0.0;
    const Model& model = a.model();
    for (const auto& [ki, ti] : a.terms())
        for (const auto& [kj, tj] : a.terms()) {
            const auto gi = model.negate(ti.g);
            total += std::conj(ti.c) * tj.c * std::polar(1.0, two_pi * form(gi, tj.g)) * s(model.add(gi, tj.g));
        }
    return total;
}

// Fraction of spectral energy at frequencies <= 0 by a plain O(n^2) DFT,
// a component e^{+2 pi i E t} counting as frequency E; period 1, DC dropped.
inline double negative_frequency_fraction(const std::vector<Complex>& f) {
    const int n = static_cast<int>(f.size());
    double neg = 0.0, tot = 0.0;
    for (int l = 1; l < n; ++l) {
        Complex c = 0.0;
        for (int j = 0; j < n; ++j) c += f[j] * std::polar(1.0, -two_pi * l * j / n);
        const double e = std::norm(c);
        tot += e;
        if (2 * l >= n) neg += e;
    }
    return tot == 0.0 ? 0.0 : neg / tot;
}

inline Complex basis(const dcqft::TestFormComponent& c, double th) {
    const double x = two_pi * c.k * th;
    switch (c.basis) {
        case dcqft::TestFormComponent::Basis::cos: return std::cos(x);
        case dcqft::TestFormComponent::Basis::sin: return std::sin(x);
        default: return std::polar(1.0, x);
    }
}

// sum_k 1/(2 pi k) int int e^{-2 pi i k (t - t')} cos(2 pi k (th - th')) psi~(t, th) psi(t', th'),
// with the kernel split into its two exponentials so every integral factorizes.
inline Complex propagator_kernel(const dcqft::TestForm& pt, const dcqft::TestForm& p, int kmax, int n_theta) {
    Complex total = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        for (int sidx = 0; sidx < 2; ++sidx) {
            // F(sign) = int e^{-2 pi i k t} e^{sign 2 pi i k th} psi~, G(sign) = int e^{2 pi i k t'} e^{-sign ...} psi
            Complex F[2] = {0.0, 0.0}, G[2] = {0.0, 0.0};
            for (const auto& c : pt.components) {
                if (c.s != sidx) continue;
                for (int q = 0; q < 2; ++q) {
                    const double sg = q == 0 ? 1.0 : -1.0;
                    Complex th_int = 0.0;
                    for (int l = 0; l < n_theta; ++l) {
                        const double th = static_cast<double>(l) / n_theta;
                        th_int += basis(c, th) * std::polar(1.0, sg * two_pi * k * th);
                    }
                    Complex t_int = 0.0;
                    for (std::size_t j = 0; j < c.samples.size(); ++j)
                        t_int += c.samples[j] * std::polar(1.0, -two_pi * k * (c.t0 + j * c.dt));
                    F[q] += th_int / static_cast<double>(n_theta) * t_int * c.dt;
                }
            }
            for (const auto& c : p.components) {
                if (c.s != sidx) continue;
                for (int q = 0; q < 2; ++q) {
                    const double sg = q == 0 ? 1.0 : -1.0;
                    Complex th_int = 0.0;
                    for (int l = 0; l < n_theta; ++l) {
                        const double th = static_cast<double>(l) / n_theta;
                        th_int += basis(c, th) * std::polar(1.0, -sg * two_pi * k * th);
                    }
                    Complex t_int = 0.0;
                    for (std::size_t j = 0; j < c.samples.size(); ++j)
                        t_int += c.samples[j] * std::polar(1.0, two_pi * k * (c.t0 + j * c.dt));
                    G[q] += th_int / static_cast<double>(n_theta) * t_int * c.dt;
                }
            }
            total += 0.5 * (F[0] * G[0] + F[1] * G[1]) / (two_pi * k);
        }
    }
    return total;
}

// Raw tensor e_{i_1} x ... x e_{i_p} for the occupation n, normalized so that its
// symmetrization is the unit occupation state.
inline Eigen::VectorXcd occupation_tensor(std::size_t d, const dcqft::Occupation& n) {
    std::size_t p = 0;
    for (int x : n) p += static_cast<std::size_t>(x);
    std::size_t size = 1;
    for (std::size_t i = 0; i < p; ++i) size *= d;
    Eigen::VectorXcd t = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size));
    // all index tuples with occupation n get equal weight 1/sqrt(#tuples)
    double count = 0.0;
    std::vector<std::size_t> hits;
    for (std::size_t flat = 0; flat < size; ++flat) {
        std::size_t rem = flat;
        dcqft::Occupation occ(d, 0);
        for (std::size_t a = 0; a < p; ++a) {
            occ[rem % d] += 1;
            rem /= d;
        }
        if (occ == n) {
            hits.push_back(flat);
            count += 1.0;
        }
    }
    for (auto h : hits) t(static_cast<Eigen::Index>(h)) = 1.0 / std::sqrt(count);
    return t;
}

// U^{(x) p} applied to a raw p-fold tensor.
inline Eigen::VectorXcd tensor_power_apply(const Eigen::MatrixXcd& U, std::size_t p, const Eigen::VectorXcd& t) {
    Eigen::VectorXcd cur = t;
    const auto d = static_cast<std::size_t>(U.rows());
    std::size_t size = static_cast<std::size_t>(t.size());
    // act on one tensor slot at a time
    for (std::size_t slot = 0; slot < p; ++slot) {
        std::size_t stride = 1;
        for (std::size_t a = 0; a < slot; ++a) stride *= d;
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(cur.size());
        for (std::size_t flat = 0; flat < size; ++flat) {
            const std::size_t i = (flat / stride) % d;
            const std::size_t base = flat - i * stride;
            for (std::size_t r = 0; r < d; ++r)
                next(static_cast<Eigen::Index>(base + r * stride)) +=
                    U(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) * cur(static_cast<Eigen::Index>(flat));
        }
        cur = next;
    }
    return cur;
}

// phi (x) t as a raw (p+1)-fold tensor with phi in the leading slot.
inline Eigen::VectorXcd tensor_prepend(const Eigen::VectorXcd& phi, const Eigen::VectorXcd& t) {
    Eigen::VectorXcd out(phi.size() * t.size());
    for (Eigen::Index i = 0; i < phi.size(); ++i) out.segment(i * t.size(), t.size()) = phi(i) * t;
    return out;
}

}  // namespace oracle
