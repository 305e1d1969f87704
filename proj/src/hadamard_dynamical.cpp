#include "dcqft/hadamard_dynamical.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace dcqft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI(0.0, 1.0);

int pf_max_mode(const PositiveFrequencyData& p) {
    int k = 0;
    for (const auto& m : p.modes) k = std::max(k, m.k);
    return k;
}

}  // namespace

PositiveFrequencyData project_positive(const DynamicalDatum& d) {
    validate_modes(d.modes);
    PositiveFrequencyData p;
    for (const auto& m : d.modes)
        p.modes.push_back({m.k, 0.5 * Complex(-m.b_minus, m.a_minus), 0.5 * Complex(-m.b_plus, m.a_plus)});
    return p;
}

DynamicalDatum real_datum(const PositiveFrequencyData& p) {
    ModeList modes;
    for (const auto& m : p.modes) {
        ChiralMode c;
        c.k = m.k;
        c.a_minus = 2.0 * m.minus.imag();
        c.b_minus = -2.0 * m.minus.real();
        c.a_plus = 2.0 * m.plus.imag();
        c.b_plus = -2.0 * m.plus.real();
        if (!c.is_zero()) modes.push_back(c);
    }
    return make_datum(std::move(modes));
}

Complex tau_complex(const PositiveFrequencyData& p, const PositiveFrequencyData& pp, int n_points) {
    const int kmax = std::max(pf_max_mode(p), pf_max_mode(pp));
    if (n_points <= 2 * kmax) throw std::invalid_argument("tau_complex: theta grid does not resolve the modes");
    Complex s = 0.0;
    for (int j = 0; j < n_points; ++j) {
        const double theta = static_cast<double>(j) / n_points;
        Complex f = 0.0, ft = 0.0, dfp = 0.0, dftp = 0.0;
        for (const auto& m : p.modes) {
            const Complex e = std::polar(1.0, kTwoPi * m.k * theta);
            f += m.minus * e + m.plus * std::conj(e);
            ft += m.minus * e - m.plus * std::conj(e);
        }
        for (const auto& m : pp.modes) {
            const Complex e = std::polar(1.0, kTwoPi * m.k * theta);
            const Complex w = kI * kTwoPi * static_cast<double>(m.k);
            dfp += w * (m.minus * e - m.plus * std::conj(e));
            dftp += w * (m.minus * e + m.plus * std::conj(e));
        }
        s += std::conj(ft) * dfp + std::conj(f) * dftp;
    }
    return s / static_cast<double>(n_points);
}

double mu(const DynamicalDatum& d, const DynamicalDatum& dp) {
    double s = 0.0;
    std::size_t j = 0;
    for (const auto& m : d.modes) {
        while (j < dp.modes.size() && dp.modes[j].k < m.k) ++j;
        if (j == dp.modes.size()) break;
        const auto& q = dp.modes[j];
        if (q.k != m.k) continue;
        s += kPi * m.k *
             (m.a_plus * q.a_plus + m.b_plus * q.b_plus + m.a_minus * q.a_minus + m.b_minus * q.b_minus);
    }
    return s;
}

double omega_mu(const DynamicalDatum& d) { return std::exp(-0.5 * mu(d, d)); }

Complex two_point(const DynamicalDatum& d, const DynamicalDatum& dp) {
    return {mu(d, dp), 0.5 * tau_u(d, dp)};
}

bool cs_inequality(const DynamicalDatum& d, const DynamicalDatum& dp, double slack) {
    const double lhs = 0.5 * std::fabs(tau_u(d, dp));
    const double rhs = std::sqrt(std::max(0.0, mu(d, d))) * std::sqrt(std::max(0.0, mu(dp, dp)));
    return lhs <= rhs + slack * std::max(1.0, rhs);
}

DynamicalDatum purity_maximizer(const DynamicalDatum& d) {
    validate_modes(d.modes);
    if (d.modes.empty()) throw std::invalid_argument("purity_maximizer: zero datum");
    DynamicalDatum out;
    for (const auto& m : d.modes) out.modes.push_back({m.k, m.b_plus, m.b_minus, -m.a_plus, -m.a_minus});
    return out;
}

DynamicalDatum symmetry_translate(const DynamicalDatum& d, double s, TorusValue phi0) {
    validate_modes(d.modes);
    if (!std::isfinite(s)) throw std::invalid_argument("symmetry_translate: non-finite time shift");
    DynamicalDatum out;
    for (const auto& m : d.modes) {
        // reduce the shifts mod 1 before scaling so large s keeps its phase accuracy
        const double sp = torus_from_real(static_cast<double>(m.k) * s).rep();
        const double ph = (static_cast<std::int64_t>(m.k) * phi0).rep();
        const double am = kTwoPi * (sp - ph);
        const double ap = kTwoPi * (sp + ph);
        const double cm = std::cos(am), sm = std::sin(am), cp = std::cos(ap), spn = std::sin(ap);
        ChiralMode r;
        r.k = m.k;
        r.a_minus = m.a_minus * cm + m.b_minus * sm;
        r.b_minus = m.b_minus * cm - m.a_minus * sm;
        r.a_plus = m.a_plus * cp + m.b_plus * spn;
        r.b_plus = m.b_plus * cp - m.a_plus * spn;
        if (!r.is_zero()) out.modes.push_back(r);
    }
    return out;
}

DynamicalDatum duality_zeta_u(const DynamicalDatum& d) {
    validate_modes(d.modes);
    DynamicalDatum out = d;
    for (auto& m : out.modes) {
        m.a_plus = -m.a_plus;
        m.b_plus = -m.b_plus;
    }
    return out;
}

double ground_state_certificate(const DynamicalDatum& d, const DynamicalDatum& dp, int n_samples) {
    const int kmax = std::max(max_mode(d.modes), max_mode(dp.modes));
    if (n_samples < 1 || (n_samples & (n_samples - 1)) != 0)
        throw std::invalid_argument("ground_state_certificate: sample count must be a power of two");
    if (n_samples < 4 * kmax) throw std::invalid_argument("ground_state_certificate: undersampled");

    using Buffer = std::unique_ptr<fftw_complex[], decltype(&fftw_free)>;
    Buffer in(fftw_alloc_complex(n_samples), &fftw_free);
    Buffer out(fftw_alloc_complex(n_samples), &fftw_free);
    for (int j = 0; j < n_samples; ++j) {
        const double t = static_cast<double>(j) / n_samples;
        const Complex f = two_point(d, symmetry_translate(dp, t, TorusValue{}));
        in[j][0] = f.real();
        in[j][1] = f.imag();
    }
    fftw_plan plan = fftw_plan_dft_1d(n_samples, in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    double negative = 0.0, total = 0.0;
    for (int j = 1; j < n_samples; ++j) {
        const double e = out[j][0] * out[j][0] + out[j][1] * out[j][1];
        total += e;
        // bin n/2 is ambiguous in sign; count it against the certificate
        if (2 * j >= n_samples) negative += e;
    }
    return total == 0.0 ? 0.0 : negative / total;
}

namespace {

struct ExpComponent {
    int s;
    int q;
    double t0;
    double dt;
    std::vector<Complex> g;
};

std::vector<ExpComponent> expand(const TestForm& psi, double boundary_tol) {
    std::vector<ExpComponent> out;
    for (const auto& c : psi.components) {
        if (c.s != 0 && c.s != 1) throw std::invalid_argument("test form: component index must be 0 or 1");
        if (!(c.dt > 0.0) || !std::isfinite(c.t0)) throw std::invalid_argument("test form: bad t grid");
        if (c.samples.size() < 3) throw std::invalid_argument("test form: need at least 3 samples");
        double peak = 0.0;
        for (auto z : c.samples) peak = std::max(peak, std::abs(checked_complex(z)));
        const double lim = boundary_tol * std::max(1.0, peak);
        if (std::abs(c.samples.front()) > lim || std::abs(c.samples.back()) > lim)
            throw std::invalid_argument("test form: t-profile is not compactly supported on the grid");
        auto scaled = [&c](Complex f) {
            std::vector<Complex> g(c.samples);
            for (auto& z : g) z *= f;
            return g;
        };
        switch (c.basis) {
            case TestFormComponent::Basis::exp:
                out.push_back({c.s, c.k, c.t0, c.dt, c.samples});
                break;
            case TestFormComponent::Basis::cos:
                out.push_back({c.s, c.k, c.t0, c.dt, scaled(0.5)});
                out.push_back({c.s, -c.k, c.t0, c.dt, scaled(0.5)});
                break;
            case TestFormComponent::Basis::sin:
                out.push_back({c.s, c.k, c.t0, c.dt, scaled(Complex(0.0, -0.5))});
                out.push_back({c.s, -c.k, c.t0, c.dt, scaled(Complex(0.0, 0.5))});
                break;
        }
    }
    return out;
}

// sum_j g(t_j) e^{-2 pi i w t_j} dt
Complex transform(const ExpComponent& c, double w) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < c.g.size(); ++j) {
        const double t = c.t0 + static_cast<double>(j) * c.dt;
        s += c.g[j] * std::polar(1.0, -kTwoPi * w * t);
    }
    return s * c.dt;
}

Complex basis_value(const TestFormComponent& c, double theta) {
    const double x = kTwoPi * c.k * theta;
    switch (c.basis) {
        case TestFormComponent::Basis::cos: return std::cos(x);
        case TestFormComponent::Basis::sin: return std::sin(x);
        default: return std::polar(1.0, x);
    }
}

}  // namespace

TestFormModeData propagator_coefficients(const TestForm& psi, double boundary_tol) {
    TestFormModeData out;
    for (const auto& c : expand(psi, boundary_tol)) {
        if (c.q == 0) continue;  // theta-mean removal
        const int k = std::abs(c.q);
        auto& co = out.modes[k][c.s];
        if (c.q > 0) {
            co.c_plus += transform(c, k);
            co.d_plus -= transform(c, -k);
        } else {
            co.c_minus += transform(c, k);
            co.d_minus -= transform(c, -k);
        }
    }
    return out;
}

Complex two_point_tilde(const TestFormModeData& a, const TestFormModeData& b) {
    Complex s = 0.0;
    for (const auto& [k, ca] : a.modes) {
        auto it = b.modes.find(k);
        if (it == b.modes.end()) continue;
        for (int sidx = 0; sidx < 2; ++sidx) {
            const auto& x = ca[sidx];
            const auto& y = it->second[sidx];
            s += (std::conj(x.d_plus) * y.d_plus + std::conj(x.d_minus) * y.d_minus) / (4.0 * kPi * k);
        }
    }
    return s;
}

double mu_tilde(const TestFormModeData& a, const TestFormModeData& b) { return two_point_tilde(a, b).real(); }

double sigma_tilde(const TestFormModeData& a, const TestFormModeData& b) {
    return 2.0 * two_point_tilde(a, b).imag();
}

Complex two_point_kernel_oracle(const TestForm& psi_tilde, const TestForm& psi, int n_theta) {
    // validation only; the quadrature below works on the raw components
    expand(psi_tilde, 1e-12);
    expand(psi, 1e-12);
    int kmax = 0;
    for (const auto* f : {&psi_tilde, &psi})
        for (const auto& c : f->components) kmax = std::max(kmax, std::abs(c.k));
    if (n_theta <= 2 * kmax) throw std::invalid_argument("kernel oracle: theta grid does not resolve the modes");

    Complex total = 0.0;
    for (const auto& ct : psi_tilde.components) {
        for (const auto& c : psi.components) {
            if (ct.s != c.s) continue;
            for (int k = 1; k <= kmax; ++k) {
                Complex acc = 0.0;
                for (std::size_t j = 0; j < ct.samples.size(); ++j) {
                    const double t = ct.t0 + static_cast<double>(j) * ct.dt;
                    for (int l = 0; l < n_theta; ++l) {
                        const double th = static_cast<double>(l) / n_theta;
                        const Complex left = ct.samples[j] * basis_value(ct, th);
                        if (left == Complex(0.0)) continue;
                        for (std::size_t jp = 0; jp < c.samples.size(); ++jp) {
                            const double tp = c.t0 + static_cast<double>(jp) * c.dt;
                            const Complex et = std::polar(1.0, -kTwoPi * k * (t - tp));
                            for (int lp = 0; lp < n_theta; ++lp) {
                                const double thp = static_cast<double>(lp) / n_theta;
                                acc += et * std::cos(kTwoPi * k * (th - thp)) * left * c.samples[jp] *
                                       basis_value(c, thp);
                            }
                        }
                    }
                }
                total += acc * (ct.dt * c.dt / (static_cast<double>(n_theta) * n_theta)) / (kTwoPi * k);
            }
        }
    }
    return total;
}

}  // namespace dcqft
