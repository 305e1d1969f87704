#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcqft/core_numerics.hpp"

namespace dcqft {

using WeylKey = std::vector<std::int64_t>;

inline constexpr double kDefaultKeyGrid = 1e-12;

inline std::int64_t quantize_real(double x, double grid = kDefaultKeyGrid) {
    return std::llround(x / grid);
}

inline std::int64_t quantize_torus(TorusValue x, double grid = kDefaultKeyGrid) {
    const std::int64_t period = std::llround(1.0 / grid);
    const std::int64_t q = std::llround(x.rep() / grid);
    return q >= period ? q - period : q;
}

// A pre-symplectic abelian group. Models are values; two Weyl elements can
// only be combined when their models compare equal.
template <class M>
concept GroupModel = std::equality_comparable<M> &&
    requires(const M& m, const typename M::Element& g) {
        { m.zero() } -> std::convertible_to<typename M::Element>;
        { m.add(g, g) } -> std::convertible_to<typename M::Element>;
        { m.negate(g) } -> std::convertible_to<typename M::Element>;
        { m.presymplectic(g, g) } -> std::convertible_to<TorusValue>;
        { m.key(g) } -> std::convertible_to<WeylKey>;
        { m.describe(g) } -> std::convertible_to<std::string>;
        m.validate(g);
    };

class PositivityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <GroupModel M>
class WeylElement {
public:
    using Element = typename M::Element;
    struct Term {
        Element g;
        Complex c;
    };

    explicit WeylElement(M model) : model_(std::move(model)) {}

    const M& model() const { return model_; }
    const std::map<WeylKey, Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Adds c W(g), merging with an existing term for the same group element.
    void add_term(const Element& g, Complex c) {
        checked_complex(c);
        model_.validate(g);
        WeylKey key = model_.key(g);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (c != Complex(0.0)) terms_.emplace(std::move(key), Term{g, c});
            return;
        }
        it->second.c += c;
        if (it->second.c == Complex(0.0)) terms_.erase(it);
    }

    Complex coefficient(const Element& g) const {
        auto it = terms_.find(model_.key(g));
        return it == terms_.end() ? Complex(0.0) : it->second.c;
    }

    std::string describe() const {
        std::ostringstream os;
        os.precision(12);
        bool first = true;
        for (const auto& [key, t] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << t.c.real() << (t.c.imag() < 0 ? "-" : "+") << std::fabs(t.c.imag())
               << "i) W[" << model_.describe(t.g) << "]";
        }
        return first ? std::string("0") : os.str();
    }

private:
    M model_;
    std::map<WeylKey, Term> terms_;
};

template <GroupModel M>
void require_same_model(const WeylElement<M>& a, const WeylElement<M>& b) {
    if (!(a.model() == b.model())) throw std::invalid_argument("Weyl elements over different group models");
}

template <GroupModel M>
WeylElement<M> generator(const M& model, const typename M::Element& g, Complex c = 1.0) {
    WeylElement<M> out(model);
    out.add_term(g, c);
    return out;
}

template <GroupModel M>
WeylElement<M> unit(const M& model) {
    return generator(model, model.zero());
}

template <GroupModel M>
WeylElement<M> operator+(const WeylElement<M>& a, const WeylElement<M>& b) {
    require_same_model(a, b);
    WeylElement<M> out = a;
    for (const auto& [key, t] : b.terms()) out.add_term(t.g, t.c);
    return out;
}

template <GroupModel M>
WeylElement<M> operator*(Complex s, const WeylElement<M>& a) {
    WeylElement<M> out(a.model());
    if (s == Complex(0.0)) return out;
    for (const auto& [key, t] : a.terms()) out.add_term(t.g, s * t.c);
    return out;
}

template <GroupModel M>
WeylElement<M> operator-(const WeylElement<M>& a, const WeylElement<M>& b) {
    return a + Complex(-1.0) * b;
}

// W(g)W(h) = e^{2 pi i sigma(g,h)} W(g+h), extended bilinearly.
template <GroupModel M>
WeylElement<M> operator*(const WeylElement<M>& a, const WeylElement<M>& b) {
    require_same_model(a, b);
    const M& m = a.model();
    WeylElement<M> out(m);
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms())
            out.add_term(m.add(ta.g, tb.g), ta.c * tb.c * unit_phase(m.presymplectic(ta.g, tb.g)));
    return out;
}

template <GroupModel M>
WeylElement<M> adjoint(const WeylElement<M>& a) {
    WeylElement<M> out(a.model());
    for (const auto& [key, t] : a.terms()) out.add_term(a.model().negate(t.g), std::conj(t.c));
    return out;
}

template <GroupModel M>
double banach_norm(const WeylElement<M>& a) {
    double s = 0.0;
    for (const auto& [key, t] : a.terms()) s += std::abs(t.c);
    return s;
}

// Banach norm of a - b, matching terms by key.
template <GroupModel M>
double weyl_distance(const WeylElement<M>& a, const WeylElement<M>& b) {
    return banach_norm(a - b);
}

template <GroupModel M>
using StateFunction = std::function<Complex(const typename M::Element&)>;

template <GroupModel M>
Complex evaluate_state(const StateFunction<M>& s, const WeylElement<M>& a,
                       const Tolerances& tol = {}) {
    const Complex s0 = s(a.model().zero());
    if (std::abs(s0 - 1.0) > tol.eps_linear)
        throw std::invalid_argument("state function is not normalized: s(0) != 1");
    Complex sum = 0.0;
    for (const auto& [key, t] : a.terms()) sum += t.c * s(t.g);
    return sum;
}

// Real part of s(a* a); throws PositivityViolation if it is negative or not real.
template <GroupModel M>
double positivity_check(const StateFunction<M>& s, const WeylElement<M>& a,
                        const Tolerances& tol = {}) {
    const Complex v = evaluate_state(s, adjoint(a) * a, tol);
    const double scale = std::max(1.0, banach_norm(a) * banach_norm(a));
    if (std::fabs(v.imag()) >= tol.eps_linear * scale || v.real() <= -tol.eps_linear * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "positivity violated: s(a*a) = " << v.real() << " + " << v.imag() << "i for a = "
           << a.describe();
        throw PositivityViolation(os.str());
    }
    return v.real();
}

// Largest violation of presymplectic(g,g) = 0 and antisymmetry over the samples.
template <GroupModel M>
double group_model_residual(const M& model, const std::vector<typename M::Element>& samples) {
    double worst = 0.0;
    for (const auto& g : samples) {
        worst = std::max(worst, torus_distance(model.presymplectic(g, g), TorusValue{}));
        for (const auto& h : samples)
            worst = std::max(worst, torus_distance(model.presymplectic(g, h), -model.presymplectic(h, g)));
    }
    return worst;
}

template <GroupModel M>
void register_group_model(const M& model, const std::vector<typename M::Element>& samples,
                          const Tolerances& tol = {}) {
    if (group_model_residual(model, samples) > tol.eps_torus)
        throw std::invalid_argument("group model form is not alternating on the samples");
}

}  // namespace dcqft
