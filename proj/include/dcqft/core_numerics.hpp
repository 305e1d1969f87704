#pragma once

#include <complex>
#include <cstdint>

namespace dcqft {

using Complex = std::complex<double>;

// Element of R/Z, always stored by its representative in [0, 1).
class TorusValue {
public:
    TorusValue() = default;

    static TorusValue from_real(double x);

    double rep() const { return rep_; }

    TorusValue operator-() const;
    friend TorusValue operator+(TorusValue a, TorusValue b);
    friend TorusValue operator-(TorusValue a, TorusValue b);
    friend TorusValue operator*(std::int64_t n, TorusValue a);
    TorusValue& operator+=(TorusValue b) { return *this = *this + b; }
    TorusValue& operator-=(TorusValue b) { return *this = *this - b; }

private:
    double rep_ = 0.0;
};

TorusValue torus_from_real(double x);
double torus_distance(TorusValue a, TorusValue b);
// Distance of a real number from the nearest integer.
double torus_norm(double x);

struct Tolerances {
    double eps_torus = 1e-9;
    double eps_quadrature = 1e-6;
    double eps_linear = 1e-12;

    void validate() const;
};

// Throws std::domain_error unless both parts are finite.
Complex checked_complex(Complex z);

// e^{2 pi i x}
Complex unit_phase(TorusValue x);

}  // namespace dcqft
