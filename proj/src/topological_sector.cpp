#include "dcqft/topological_sector.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dcqft {

int Grading::epsilon() const { return ((k * (m - k)) % 2 == 0) ? 1 : -1; }

TopologicalModel::TopologicalModel(std::size_t n, std::size_t n_tilde, int k, int m)
    : n_(n), n_tilde_(n_tilde), grading_{k, m} {
    if (k < 0 || m < k) throw std::invalid_argument("topological model: need 0 <= k <= m");
    // u~ pairs with v and u with v~, so the two ranks have to agree
    if (n != n_tilde) throw std::invalid_argument("topological model: need n = n_tilde");
}

TopologicalElement TopologicalModel::zero() const {
    return {grading_, TorusVector(n_), TorusVector(n_tilde_), IntVector(n_, 0), IntVector(n_tilde_, 0)};
}

TopologicalElement TopologicalModel::element(TorusVector u, TorusVector ut, IntVector v, IntVector vt) const {
    TopologicalElement x{grading_, std::move(u), std::move(ut), std::move(v), std::move(vt)};
    validate(x);
    return x;
}

void TopologicalModel::validate(const TopologicalElement& x) const {
    if (!(x.grading == grading_)) throw std::invalid_argument("topological element: grading mismatch");
    if (x.u.size() != n_ || x.v.size() != n_ || x.ut.size() != n_tilde_ || x.vt.size() != n_tilde_)
        throw std::invalid_argument("topological element: rank mismatch");
}

TopologicalElement TopologicalModel::add(const TopologicalElement& x, const TopologicalElement& y) const {
    validate(x);
    validate(y);
    TopologicalElement z = x;
    for (std::size_t i = 0; i < n_; ++i) {
        z.u[i] += y.u[i];
        z.v[i] += y.v[i];
    }
    for (std::size_t j = 0; j < n_tilde_; ++j) {
        z.ut[j] += y.ut[j];
        z.vt[j] += y.vt[j];
    }
    return z;
}

TopologicalElement TopologicalModel::negate(const TopologicalElement& x) const {
    TopologicalElement z = x;
    for (auto& a : z.u) a = -a;
    for (auto& a : z.ut) a = -a;
    for (auto& a : z.v) a = -a;
    for (auto& a : z.vt) a = -a;
    return z;
}

TorusValue TopologicalModel::presymplectic(const TopologicalElement& x, const TopologicalElement& y) const {
    validate(x);
    validate(y);
    return tau_lr(x, y);
}

WeylKey TopologicalModel::key(const TopologicalElement& x) const {
    WeylKey key;
    key.reserve(2 * (n_ + n_tilde_));
    for (auto a : x.u) key.push_back(quantize_torus(a));
    for (auto a : x.ut) key.push_back(quantize_torus(a));
    key.insert(key.end(), x.v.begin(), x.v.end());
    key.insert(key.end(), x.vt.begin(), x.vt.end());
    return key;
}

std::string TopologicalModel::describe(const TopologicalElement& x) const {
    std::ostringstream os;
    os.precision(12);
    auto list = [&os](const auto& vec, auto get) {
        os << "(";
        for (std::size_t i = 0; i < vec.size(); ++i) os << (i ? "," : "") << get(vec[i]);
        os << ")";
    };
    auto rep = [](TorusValue a) { return a.rep(); };
    auto id = [](std::int64_t a) { return a; };
    os << "u=";
    list(x.u, rep);
    os << " ut=";
    list(x.ut, rep);
    os << " v=";
    list(x.v, id);
    os << " vt=";
    list(x.vt, id);
    return os.str();
}

TorusValue pairing_f(const TorusVector& u, const IntVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("pairing_f: length mismatch");
    TorusValue s;
    for (std::size_t i = 0; i < u.size(); ++i) s += v[i] * u[i];
    return s;
}

TorusValue tau_lr(const TopologicalElement& x, const TopologicalElement& y) {
    if (!(x.grading == y.grading)) throw std::invalid_argument("tau_lr: grading mismatch");
    if (x.u.size() != y.u.size() || x.ut.size() != y.ut.size() || x.v.size() != y.v.size() ||
        x.vt.size() != y.vt.size())
        throw std::invalid_argument("tau_lr: rank mismatch");
    const std::int64_t eps = x.grading.epsilon();
    return pairing_f(x.ut, y.v) - eps * pairing_f(x.u, y.vt) - pairing_f(y.ut, x.v) +
           eps * pairing_f(y.u, x.vt);
}

namespace {

bool all_zero(const IntVector& v) {
    for (auto a : v)
        if (a != 0) return false;
    return true;
}

bool all_zero(const TorusVector& u) {
    for (auto a : u)
        if (a.rep() != 0.0) return false;
    return true;
}

}  // namespace

Complex omega_t0(const TopologicalElement& x) {
    return (all_zero(x.u) && all_zero(x.ut) && all_zero(x.v) && all_zero(x.vt)) ? 1.0 : 0.0;
}

Complex omega_t(const TopologicalElement& x) {
    return (all_zero(x.v) && all_zero(x.vt)) ? 1.0 : 0.0;
}

TorusValue gns_phase(const TopologicalElement& x) {
    const std::int64_t eps = x.grading.epsilon();
    return pairing_f(x.ut, x.v) - eps * pairing_f(x.u, x.vt);
}

double omega_t_grouped(const TopologicalWeyl& a) {
    std::map<LatticeKet, Complex> groups;
    for (const auto& [key, t] : a.terms()) groups[LatticeKet{t.g.v, t.g.vt}] += t.c * unit_phase(gns_phase(t.g));
    double s = 0.0;
    for (const auto& [k, z] : groups) s += std::norm(z);
    return s;
}

void GnsVector::add(const LatticeKet& ket, Complex c) {
    checked_complex(c);
    auto it = amps_.find(ket);
    if (it == amps_.end()) {
        if (c != Complex(0.0)) amps_.emplace(ket, c);
        return;
    }
    it->second += c;
    if (it->second == Complex(0.0)) amps_.erase(it);
}

Complex GnsVector::amplitude(const LatticeKet& ket) const {
    auto it = amps_.find(ket);
    return it == amps_.end() ? Complex(0.0) : it->second;
}

double GnsVector::norm() const { return std::sqrt(inner_product(*this, *this).real()); }

GnsVector ket(IntVector v, IntVector vt, Complex c) {
    GnsVector out;
    out.add(LatticeKet{std::move(v), std::move(vt)}, c);
    return out;
}

GnsVector operator+(const GnsVector& a, const GnsVector& b) {
    GnsVector out = a;
    for (const auto& [k, c] : b.amplitudes()) out.add(k, c);
    return out;
}

GnsVector operator*(Complex s, const GnsVector& a) {
    GnsVector out;
    if (s == Complex(0.0)) return out;
    for (const auto& [k, c] : a.amplitudes()) out.add(k, s * c);
    return out;
}

GnsVector operator-(const GnsVector& a, const GnsVector& b) { return a + Complex(-1.0) * b; }

double gns_distance(const GnsVector& a, const GnsVector& b) { return (a - b).norm(); }

GnsVector gns_quotient(const TopologicalWeyl& a) {
    GnsVector out;
    for (const auto& [key, t] : a.terms()) out.add(LatticeKet{t.g.v, t.g.vt}, t.c * unit_phase(gns_phase(t.g)));
    return out;
}

Complex inner_product(const GnsVector& x, const GnsVector& y) {
    Complex s = 0.0;
    const auto& small = x.size() <= y.size() ? x : y;
    const auto& large = x.size() <= y.size() ? y : x;
    for (const auto& [k, c] : small.amplitudes()) {
        const Complex d = large.amplitude(k);
        if (d == Complex(0.0)) continue;
        s += (&small == &x) ? std::conj(c) * d : std::conj(d) * c;
    }
    return s;
}

namespace {

void check_ket(const TopologicalModel& model, const LatticeKet& k) {
    if (k.v.size() != model.n() || k.vt.size() != model.n_tilde())
        throw std::invalid_argument("GNS vector: rank mismatch");
}

}  // namespace

GnsVector represent(const TopologicalModel& model, const TopologicalElement& x, const GnsVector& psi) {
    model.validate(x);
    TopologicalWeyl wx = generator(model, x);
    GnsVector out;
    for (const auto& [k, c] : psi.amplitudes()) {
        check_ket(model, k);
        TopologicalWeyl w = wx * generator(model, model.element(TorusVector(model.n()),
                                                                TorusVector(model.n_tilde()), k.v, k.vt));
        out = out + c * gns_quotient(w);
    }
    return out;
}

GnsVector represent(const TopologicalWeyl& a, const GnsVector& psi) {
    GnsVector out;
    for (const auto& [key, t] : a.terms()) out = out + t.c * represent(a.model(), t.g, psi);
    return out;
}

TopologicalElement rotation_element(const TopologicalModel& model, const TorusVector& u) {
    TopologicalElement x = model.zero();
    x.u = u;
    model.validate(x);
    return x;
}

TopologicalElement rotation_tilde_element(const TopologicalModel& model, const TorusVector& ut) {
    TopologicalElement x = model.zero();
    x.ut = ut;
    model.validate(x);
    return x;
}

TopologicalElement translation_element(const TopologicalModel& model, const IntVector& v) {
    TopologicalElement x = model.zero();
    x.v = v;
    model.validate(x);
    return x;
}

TopologicalElement translation_tilde_element(const TopologicalModel& model, const IntVector& vt) {
    TopologicalElement x = model.zero();
    x.vt = vt;
    model.validate(x);
    return x;
}

GnsVector momentum(const TopologicalModel& model, std::size_t i, const GnsVector& psi) {
    if (i >= model.n()) throw std::out_of_range("momentum: index out of range");
    GnsVector out;
    for (const auto& [k, c] : psi.amplitudes()) {
        check_ket(model, k);
        out.add(k, static_cast<double>(k.v[i]) * c);
    }
    return out;
}

GnsVector momentum_tilde(const TopologicalModel& model, std::size_t j, const GnsVector& psi) {
    if (j >= model.n_tilde()) throw std::out_of_range("momentum_tilde: index out of range");
    GnsVector out;
    for (const auto& [k, c] : psi.amplitudes()) {
        check_ket(model, k);
        out.add(k, static_cast<double>(k.vt[j]) * c);
    }
    return out;
}

GnsVector duality_U(const TopologicalModel& model, const GnsVector& psi) {
    if (!model.self_dual()) throw std::invalid_argument("duality_U: requires n = n_tilde and m = 2k");
    const int kk = model.grading().k;
    const std::int64_t s = (kk * kk) % 2 == 0 ? -1 : 1;
    GnsVector out;
    for (const auto& [k, c] : psi.amplitudes()) {
        check_ket(model, k);
        IntVector v(k.vt.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * k.vt[i];
        out.add(LatticeKet{std::move(v), k.v}, c);
    }
    return out;
}

}  // namespace dcqft
