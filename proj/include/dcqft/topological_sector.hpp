#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcqft/core_numerics.hpp"
#include "dcqft/weyl_algebra.hpp"

namespace dcqft {

using IntVector = std::vector<std::int64_t>;
using TorusVector = std::vector<TorusValue>;

struct Grading {
    int k = 1;
    int m = 2;

    // (-1)^{k(m-k)}
    int epsilon() const;
    bool operator==(const Grading&) const = default;
};

struct TopologicalElement {
    Grading grading;
    TorusVector u;
    TorusVector ut;
    IntVector v;
    IntVector vt;
};

class TopologicalModel {
public:
    using Element = TopologicalElement;

    TopologicalModel(std::size_t n, std::size_t n_tilde, int k, int m);

    std::size_t n() const { return n_; }
    std::size_t n_tilde() const { return n_tilde_; }
    const Grading& grading() const { return grading_; }
    int epsilon() const { return grading_.epsilon(); }
    bool self_dual() const { return n_ == n_tilde_ && grading_.m == 2 * grading_.k; }

    TopologicalElement zero() const;
    TopologicalElement add(const TopologicalElement& x, const TopologicalElement& y) const;
    TopologicalElement negate(const TopologicalElement& x) const;
    TorusValue presymplectic(const TopologicalElement& x, const TopologicalElement& y) const;
    WeylKey key(const TopologicalElement& x) const;
    std::string describe(const TopologicalElement& x) const;
    void validate(const TopologicalElement& x) const;

    TopologicalElement element(TorusVector u, TorusVector ut, IntVector v, IntVector vt) const;

    bool operator==(const TopologicalModel&) const = default;

private:
    std::size_t n_;
    std::size_t n_tilde_;
    Grading grading_;
};

using TopologicalWeyl = WeylElement<TopologicalModel>;

TorusValue pairing_f(const TorusVector& u, const IntVector& v);

TorusValue tau_lr(const TopologicalElement& x, const TopologicalElement& y);

Complex omega_t0(const TopologicalElement& x);
Complex omega_t(const TopologicalElement& x);

// omega_t(a* a) as the sum over lattice classes of |sum alpha_i e^{2 pi i theta_i}|^2.
double omega_t_grouped(const TopologicalWeyl& a);

struct LatticeKet {
    IntVector v;
    IntVector vt;
    auto operator<=>(const LatticeKet&) const = default;
};

class GnsVector {
public:
    const std::map<LatticeKet, Complex>& amplitudes() const { return amps_; }
    void add(const LatticeKet& ket, Complex c);
    Complex amplitude(const LatticeKet& ket) const;
    std::size_t size() const { return amps_.size(); }
    double norm() const;

private:
    std::map<LatticeKet, Complex> amps_;
};

GnsVector ket(IntVector v, IntVector vt, Complex c = 1.0);
GnsVector operator+(const GnsVector& a, const GnsVector& b);
GnsVector operator*(Complex s, const GnsVector& a);
GnsVector operator-(const GnsVector& a, const GnsVector& b);
double gns_distance(const GnsVector& a, const GnsVector& b);

// Phase of the class [W(u,ut,v,vt)] = e^{2 pi i theta} |v,vt>.
TorusValue gns_phase(const TopologicalElement& x);

GnsVector gns_quotient(const TopologicalWeyl& a);
Complex inner_product(const GnsVector& x, const GnsVector& y);

GnsVector represent(const TopologicalModel& model, const TopologicalElement& x, const GnsVector& psi);
GnsVector represent(const TopologicalWeyl& a, const GnsVector& psi);

TopologicalElement rotation_element(const TopologicalModel& model, const TorusVector& u);
TopologicalElement rotation_tilde_element(const TopologicalModel& model, const TorusVector& ut);
TopologicalElement translation_element(const TopologicalModel& model, const IntVector& v);
TopologicalElement translation_tilde_element(const TopologicalModel& model, const IntVector& vt);

GnsVector momentum(const TopologicalModel& model, std::size_t i, const GnsVector& psi);
GnsVector momentum_tilde(const TopologicalModel& model, std::size_t j, const GnsVector& psi);

// |v,vt> -> |-(-1)^{k^2} vt, v>
GnsVector duality_U(const TopologicalModel& model, const GnsVector& psi);

}  // namespace dcqft
