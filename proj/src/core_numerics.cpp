#include "dcqft/core_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcqft {

namespace {

double reduce(double x) {
    double r = x - std::floor(x);
    // x slightly below an integer can round up to exactly 1.0
    if (r >= 1.0) r = 0.0;
    return r;
}

}  // namespace

TorusValue TorusValue::from_real(double x) {
    if (!std::isfinite(x)) throw std::domain_error("torus_from_real: non-finite input");
    TorusValue t;
    t.rep_ = reduce(x);
    return t;
}

TorusValue TorusValue::operator-() const {
    TorusValue t;
    t.rep_ = reduce(-rep_);
    return t;
}

TorusValue operator+(TorusValue a, TorusValue b) {
    TorusValue t;
    t.rep_ = reduce(a.rep_ + b.rep_);
    return t;
}

TorusValue operator-(TorusValue a, TorusValue b) {
    TorusValue t;
    t.rep_ = reduce(a.rep_ - b.rep_);
    return t;
}

TorusValue operator*(std::int64_t n, TorusValue a) {
    TorusValue t;
    t.rep_ = reduce(static_cast<double>(n) * a.rep_);
    return t;
}

TorusValue torus_from_real(double x) { return TorusValue::from_real(x); }

double torus_distance(TorusValue a, TorusValue b) {
    const double d = std::fabs(a.rep() - b.rep());
    return std::min(d, 1.0 - d);
}

double torus_norm(double x) {
    if (!std::isfinite(x)) return INFINITY;
    return std::fabs(x - std::nearbyint(x));
}

void Tolerances::validate() const {
    if (!(eps_torus > 0.0) || !(eps_quadrature > 0.0) || !(eps_linear > 0.0))
        throw std::invalid_argument("tolerances must be strictly positive");
}

Complex checked_complex(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("non-finite complex scalar");
    return z;
}

Complex unit_phase(TorusValue x) {
    return std::polar(1.0, 2.0 * std::numbers::pi * x.rep());
}

}  // namespace dcqft
