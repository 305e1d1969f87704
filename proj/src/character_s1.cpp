#include "dcqft/character_s1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dcqft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ModeList merge_modes(const ModeList& a, const ModeList& b, double sb) {
    ModeList out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        ChiralMode m;
        if (j == b.size() || (i < a.size() && a[i].k < b[j].k)) {
            m = a[i++];
        } else if (i == a.size() || b[j].k < a[i].k) {
            m = b[j];
            m.a_plus *= sb;
            m.a_minus *= sb;
            m.b_plus *= sb;
            m.b_minus *= sb;
            ++j;
        } else {
            m = a[i];
            m.a_plus += sb * b[j].a_plus;
            m.a_minus += sb * b[j].a_minus;
            m.b_plus += sb * b[j].b_plus;
            m.b_minus += sb * b[j].b_minus;
            ++i;
            ++j;
        }
        if (!m.is_zero()) out.push_back(m);
    }
    return out;
}

ModeList scaled(const ModeList& a, double s) { return merge_modes({}, a, s); }

}  // namespace

void validate_modes(const ModeList& modes) {
    int prev = 0;
    for (const auto& m : modes) {
        if (m.k < 1) throw std::invalid_argument("mode number must be >= 1");
        if (m.k <= prev) throw std::invalid_argument("modes must be strictly increasing in k");
        prev = m.k;
        if (!std::isfinite(m.a_plus) || !std::isfinite(m.a_minus) || !std::isfinite(m.b_plus) ||
            !std::isfinite(m.b_minus))
            throw std::invalid_argument("non-finite mode coefficient");
    }
}

ModeList sorted_modes(ModeList modes) {
    std::stable_sort(modes.begin(), modes.end(), [](const ChiralMode& a, const ChiralMode& b) { return a.k < b.k; });
    validate_modes(modes);
    return modes;
}

int max_mode(const ModeList& modes) {
    int k = 0;
    for (const auto& m : modes) k = std::max(k, m.k);
    return k;
}

DynamicalDatum make_datum(ModeList modes) { return DynamicalDatum{sorted_modes(std::move(modes))}; }

DynamicalDatum operator+(const DynamicalDatum& a, const DynamicalDatum& b) {
    return {merge_modes(a.modes, b.modes, 1.0)};
}
DynamicalDatum operator-(const DynamicalDatum& a) { return {scaled(a.modes, -1.0)}; }
DynamicalDatum operator-(const DynamicalDatum& a, const DynamicalDatum& b) {
    return {merge_modes(a.modes, b.modes, -1.0)};
}
DynamicalDatum operator*(double s, const DynamicalDatum& a) { return {scaled(a.modes, s)}; }

FourierCharacter operator+(const FourierCharacter& a, const FourierCharacter& b) {
    return {a.h0 + b.h0, a.ht0 + b.ht0, a.n + b.n, a.nt + b.nt, merge_modes(a.modes, b.modes, 1.0)};
}

FourierCharacter operator-(const FourierCharacter& a) {
    return {-a.h0, -a.ht0, -a.n, -a.nt, scaled(a.modes, -1.0)};
}

double phi(const DynamicalDatum& d, double t, double theta) {
    double s = 0.0;
    for (const auto& m : d.modes) {
        const double xm = kTwoPi * m.k * (t - theta);
        const double xp = kTwoPi * m.k * (t + theta);
        s += -m.b_minus * std::cos(xm) - m.b_plus * std::cos(xp) + m.a_minus * std::sin(xm) +
             m.a_plus * std::sin(xp);
    }
    return s;
}

double phi_tilde(const DynamicalDatum& d, double t, double theta) {
    double s = 0.0;
    for (const auto& m : d.modes) {
        const double xm = kTwoPi * m.k * (t - theta);
        const double xp = kTwoPi * m.k * (t + theta);
        s += -m.b_minus * std::cos(xm) + m.b_plus * std::cos(xp) + m.a_minus * std::sin(xm) -
             m.a_plus * std::sin(xp);
    }
    return s;
}

double field_lift(const FourierCharacter& h, double t, double theta) {
    return h.h0.rep() + static_cast<double>(h.n) * theta - static_cast<double>(h.nt) * t +
           phi(DynamicalDatum{h.modes}, t, theta);
}

double dual_field_lift(const FourierCharacter& h, double t, double theta) {
    return h.ht0.rep() + static_cast<double>(h.nt) * theta - static_cast<double>(h.n) * t +
           phi_tilde(DynamicalDatum{h.modes}, t, theta);
}

CurvatureData curvature(const FourierCharacter& h) {
    CurvatureData c;
    c.harmonic_dt = -h.nt;
    c.harmonic_dtheta = h.n;
    for (const auto& m : h.modes) {
        const double w = kTwoPi * m.k;
        CurvatureMode cm;
        cm.k = m.k;
        cm.dt = {w * m.b_minus, w * m.b_plus, w * m.a_minus, w * m.a_plus};
        cm.dtheta = {-w * m.b_minus, w * m.b_plus, -w * m.a_minus, w * m.a_plus};
        c.modes.push_back(cm);
    }
    return c;
}

CurvatureData curvature_dual(const FourierCharacter& h) {
    CurvatureData c;
    c.harmonic_dt = -h.n;
    c.harmonic_dtheta = h.nt;
    for (const auto& m : h.modes) {
        const double w = kTwoPi * m.k;
        CurvatureMode cm;
        cm.k = m.k;
        cm.dt = {w * m.b_minus, -w * m.b_plus, w * m.a_minus, -w * m.a_plus};
        cm.dtheta = {-w * m.b_minus, -w * m.b_plus, -w * m.a_minus, -w * m.a_plus};
        c.modes.push_back(cm);
    }
    return c;
}

CurvatureData hodge_star(const CurvatureData& c) {
    auto neg = [](const TrigCoefficients& x) {
        return TrigCoefficients{-x.sin_minus, -x.sin_plus, -x.cos_minus, -x.cos_plus};
    };
    CurvatureData out;
    out.harmonic_dt = -c.harmonic_dtheta;
    out.harmonic_dtheta = -c.harmonic_dt;
    for (const auto& m : c.modes) out.modes.push_back({m.k, neg(m.dtheta), neg(m.dt)});
    return out;
}

std::pair<double, double> evaluate_form(const CurvatureData& c, double t, double theta) {
    double ft = static_cast<double>(c.harmonic_dt);
    double fth = static_cast<double>(c.harmonic_dtheta);
    auto eval = [](const TrigCoefficients& x, double xm, double xp) {
        return x.sin_minus * std::sin(xm) + x.sin_plus * std::sin(xp) + x.cos_minus * std::cos(xm) +
               x.cos_plus * std::cos(xp);
    };
    for (const auto& m : c.modes) {
        const double xm = kTwoPi * m.k * (t - theta);
        const double xp = kTwoPi * m.k * (t + theta);
        ft += eval(m.dt, xm, xp);
        fth += eval(m.dtheta, xm, xp);
    }
    return {ft, fth};
}

double exterior_derivative_residual(const CurvatureData& c) {
    // d(F_t dt + F_theta dtheta) = (d_t F_theta - d_theta F_t) dt ^ dtheta
    double worst = 0.0;
    for (const auto& m : c.modes) {
        const double w = kTwoPi * m.k;
        const double cos_m = w * (m.dtheta.sin_minus + m.dt.sin_minus);
        const double cos_p = w * (m.dtheta.sin_plus - m.dt.sin_plus);
        const double sin_m = -w * (m.dtheta.cos_minus + m.dt.cos_minus);
        const double sin_p = -w * (m.dtheta.cos_plus - m.dt.cos_plus);
        worst = std::max({worst, std::fabs(cos_m), std::fabs(cos_p), std::fabs(sin_m), std::fabs(sin_p)});
    }
    return worst;
}

double curvature_distance(const CurvatureData& a, const CurvatureData& b) {
    double worst = std::max(std::fabs(static_cast<double>(a.harmonic_dt - b.harmonic_dt)),
                            std::fabs(static_cast<double>(a.harmonic_dtheta - b.harmonic_dtheta)));
    auto diff = [](const TrigCoefficients& x, const TrigCoefficients& y) {
        return std::max({std::fabs(x.sin_minus - y.sin_minus), std::fabs(x.sin_plus - y.sin_plus),
                         std::fabs(x.cos_minus - y.cos_minus), std::fabs(x.cos_plus - y.cos_plus)});
    };
    auto mag = [&diff](const CurvatureMode& m) { return std::max(diff(m.dt, {}), diff(m.dtheta, {})); };
    std::size_t i = 0, j = 0;
    while (i < a.modes.size() || j < b.modes.size()) {
        if (j == b.modes.size() || (i < a.modes.size() && a.modes[i].k < b.modes[j].k)) {
            worst = std::max(worst, mag(a.modes[i++]));
        } else if (i == a.modes.size() || b.modes[j].k < a.modes[i].k) {
            worst = std::max(worst, mag(b.modes[j++]));
        } else {
            worst = std::max({worst, diff(a.modes[i].dt, b.modes[j].dt), diff(a.modes[i].dtheta, b.modes[j].dtheta)});
            ++i;
            ++j;
        }
    }
    return worst;
}

std::pair<std::int64_t, std::int64_t> characteristic_class(const FourierCharacter& h) { return {h.n, h.nt}; }

CauchyRestriction restrict_to_cauchy(const FourierCharacter& h) {
    CauchyRestriction r{h.h0, h.ht0, h.n, h.nt, {}};
    for (const auto& m : h.modes)
        r.modes.push_back({m.k, -m.b_minus - m.b_plus, m.a_plus - m.a_minus, m.b_plus - m.b_minus,
                           -m.a_plus - m.a_minus});
    return r;
}

TopologicalModel circle_topological_model() { return TopologicalModel(1, 1, 1, 2); }

SectorDecomposition decompose(const FourierCharacter& h) {
    const TopologicalModel model = circle_topological_model();
    return {model.element({h.h0}, {h.ht0}, {h.n}, {h.nt}), DynamicalDatum{h.modes}};
}

FourierCharacter recompose(const TopologicalElement& x, const DynamicalDatum& d) {
    circle_topological_model().validate(x);
    validate_modes(d.modes);
    return {x.u[0], x.ut[0], x.v[0], x.vt[0], d.modes};
}

double tau_u(const DynamicalDatum& d, const DynamicalDatum& dp) {
    double s = 0.0;
    std::size_t j = 0;
    for (const auto& m : d.modes) {
        while (j < dp.modes.size() && dp.modes[j].k < m.k) ++j;
        if (j == dp.modes.size()) break;
        const auto& q = dp.modes[j];
        if (q.k != m.k) continue;
        s += m.k * (m.b_plus * q.a_plus + m.b_minus * q.a_minus - m.a_plus * q.b_plus - m.a_minus * q.b_minus);
    }
    return kTwoPi * s;
}

TorusValue sigma(const FourierCharacter& h, const FourierCharacter& hp) {
    const TorusValue top = hp.nt * h.h0 - h.n * hp.ht0 + hp.n * h.ht0 - h.nt * hp.h0;
    return top + torus_from_real(tau_u(DynamicalDatum{h.modes}, DynamicalDatum{hp.modes}));
}

double sigma_quadrature_real(const DynamicalDatum& d, const DynamicalDatum& dp, int n_points) {
    validate_modes(d.modes);
    validate_modes(dp.modes);
    const int kmax = std::max(max_mode(d.modes), max_mode(dp.modes));
    if (n_points < 1 || n_points < 16 * kmax)
        throw std::invalid_argument("sigma_quadrature: need at least 16 points per highest mode");

    const auto rd = restrict_to_cauchy(FourierCharacter{{}, {}, 0, 0, d.modes});
    const auto rp = restrict_to_cauchy(FourierCharacter{{}, {}, 0, 0, dp.modes});
    double s = 0.0;
    for (int j = 0; j < n_points; ++j) {
        const double theta = static_cast<double>(j) / n_points;
        double f = 0.0, ft = 0.0, dfp = 0.0, dftp = 0.0;
        for (const auto& m : rd.modes) {
            const double c = std::cos(kTwoPi * m.k * theta), sn = std::sin(kTwoPi * m.k * theta);
            f += m.cos_h * c + m.sin_h * sn;
            ft += m.cos_ht * c + m.sin_ht * sn;
        }
        for (const auto& m : rp.modes) {
            const double w = kTwoPi * m.k;
            const double c = std::cos(w * theta), sn = std::sin(w * theta);
            dfp += w * (-m.cos_h * sn + m.sin_h * c);
            dftp += w * (-m.cos_ht * sn + m.sin_ht * c);
        }
        s += f * dftp + ft * dfp;
    }
    // periodic integrand: the trapezoid rule is the plain mean
    return s / n_points;
}

TorusValue sigma_quadrature(const DynamicalDatum& d, const DynamicalDatum& dp, int n_points) {
    return torus_from_real(sigma_quadrature_real(d, dp, n_points));
}

WeylKey mode_key(const ModeList& modes) {
    WeylKey key;
    for (const auto& m : modes) {
        const std::int64_t q[4] = {quantize_real(m.a_plus), quantize_real(m.a_minus), quantize_real(m.b_plus),
                                   quantize_real(m.b_minus)};
        if (q[0] == 0 && q[1] == 0 && q[2] == 0 && q[3] == 0) continue;
        key.push_back(m.k);
        key.insert(key.end(), q, q + 4);
    }
    return key;
}

std::string describe_modes(const ModeList& modes) {
    std::ostringstream os;
    os.precision(12);
    os << "modes[";
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const auto& m = modes[i];
        os << (i ? " " : "") << "k=" << m.k << ":(" << m.a_plus << "," << m.a_minus << "," << m.b_plus << ","
           << m.b_minus << ")";
    }
    os << "]";
    return os.str();
}

WeylKey CharacterModel::key(const FourierCharacter& a) const {
    WeylKey key{quantize_torus(a.h0), quantize_torus(a.ht0), a.n, a.nt};
    const WeylKey mk = mode_key(a.modes);
    key.insert(key.end(), mk.begin(), mk.end());
    return key;
}

std::string CharacterModel::describe(const FourierCharacter& a) const {
    std::ostringstream os;
    os.precision(12);
    os << "h0=" << a.h0.rep() << " ht0=" << a.ht0.rep() << " n=" << a.n << " nt=" << a.nt << " "
       << describe_modes(a.modes);
    return os.str();
}

}  // namespace dcqft
