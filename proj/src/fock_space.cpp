#include "dcqft/fock_space.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace dcqft {

namespace {

void enumerate(std::size_t dim, std::size_t p, std::size_t pos, Occupation& cur, std::vector<Occupation>& out) {
    if (pos + 1 == dim) {
        cur[pos] = static_cast<int>(p);
        out.push_back(cur);
        return;
    }
    for (std::size_t a = p + 1; a-- > 0;) {
        cur[pos] = static_cast<int>(a);
        enumerate(dim, p - a, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

std::size_t particles(const Occupation& n) {
    std::size_t p = 0;
    for (int a : n) p += static_cast<std::size_t>(a);
    return p;
}

void check_same_space(const FockVector& a, const FockVector& b) {
    if (a.space() != b.space()) throw std::invalid_argument("Fock vectors live on different spaces");
}

void check_phi(const Eigen::VectorXcd& phi, const FockVector& psi) {
    if (static_cast<std::size_t>(phi.size()) != psi.space()->dim())
        throw std::invalid_argument("one-particle vector has the wrong dimension");
}

}  // namespace

FockSpace::FockSpace(std::size_t dim, std::size_t cutoff) : dim_(dim), cutoff_(cutoff) {
    if (dim == 0) throw std::invalid_argument("Fock space: one-particle dimension must be positive");
    for (std::size_t p = 0; p <= cutoff; ++p) {
        std::vector<Occupation> sec;
        Occupation cur(dim, 0);
        enumerate(dim, p, 0, cur, sec);
        std::map<Occupation, std::size_t> look;
        for (std::size_t i = 0; i < sec.size(); ++i) look.emplace(sec[i], i);
        offsets_.push_back(total_);
        total_ += sec.size();
        sectors_.push_back(std::move(sec));
        lookup_.push_back(std::move(look));
    }
}

bool FockSpace::contains(const Occupation& n) const {
    if (n.size() != dim_) return false;
    for (int a : n)
        if (a < 0) return false;
    return particles(n) <= cutoff_;
}

std::size_t FockSpace::index(const Occupation& n) const {
    if (!contains(n)) throw std::out_of_range("occupation outside the truncated Fock space");
    return lookup_[particles(n)].at(n);
}

FockVector::FockVector(FockSpacePtr space) : space_(std::move(space)) {
    if (!space_) throw std::invalid_argument("FockVector: null space");
    for (std::size_t p = 0; p <= space_->cutoff(); ++p) sectors_.push_back(Eigen::VectorXcd::Zero(space_->sector_size(p)));
}

Complex& FockVector::at(const Occupation& n) { return sectors_[particles(n)](space_->index(n)); }

Complex FockVector::at(const Occupation& n) const { return sectors_[particles(n)](space_->index(n)); }

Eigen::VectorXcd FockVector::flatten() const {
    Eigen::VectorXcd v(space_->total_size());
    for (std::size_t p = 0; p < sectors_.size(); ++p) v.segment(space_->offset(p), sectors_[p].size()) = sectors_[p];
    return v;
}

FockVector FockVector::unflatten(FockSpacePtr space, const Eigen::VectorXcd& v) {
    FockVector out(std::move(space));
    if (static_cast<std::size_t>(v.size()) != out.space_->total_size())
        throw std::invalid_argument("unflatten: wrong vector length");
    for (std::size_t p = 0; p < out.sectors_.size(); ++p)
        out.sectors_[p] = v.segment(out.space_->offset(p), out.sectors_[p].size());
    return out;
}

FockVector vacuum(const FockSpacePtr& space) {
    FockVector v(space);
    v.sector(0)(0) = 1.0;
    return v;
}

FockVector basis_state(const FockSpacePtr& space, const Occupation& n) {
    FockVector v(space);
    v.at(n) = 1.0;
    return v;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
    check_same_space(a, b);
    FockVector out = a;
    for (std::size_t p = 0; p <= a.space()->cutoff(); ++p) out.sector(p) += b.sector(p);
    if (b.overflow()) out.mark_overflow();
    return out;
}

FockVector operator*(Complex s, const FockVector& a) {
    FockVector out = a;
    for (std::size_t p = 0; p <= a.space()->cutoff(); ++p) out.sector(p) *= s;
    return out;
}

FockVector operator-(const FockVector& a, const FockVector& b) { return a + Complex(-1.0) * b; }

Complex inner(const FockVector& a, const FockVector& b) {
    check_same_space(a, b);
    Complex s = 0.0;
    for (std::size_t p = 0; p <= a.space()->cutoff(); ++p) s += a.sector(p).dot(b.sector(p));
    return s;
}

double norm(const FockVector& a) { return std::sqrt(std::max(0.0, inner(a, a).real())); }

FockVector create(const Eigen::VectorXcd& phi, const FockVector& psi) {
    check_phi(phi, psi);
    const FockSpace& sp = *psi.space();
    FockVector out(psi.space());
    if (psi.overflow()) out.mark_overflow();
    for (std::size_t p = 0; p <= sp.cutoff(); ++p) {
        const auto& basis = sp.basis(p);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Complex c = psi.sector(p)(b);
            if (c == Complex(0.0)) continue;
            for (std::size_t i = 0; i < sp.dim(); ++i) {
                if (phi(i) == Complex(0.0)) continue;
                if (p == sp.cutoff()) {
                    out.mark_overflow();
                    continue;
                }
                Occupation n = basis[b];
                n[i] += 1;
                out.at(n) += phi(i) * std::sqrt(static_cast<double>(n[i])) * c;
            }
        }
    }
    return out;
}

FockVector annihilate(const Eigen::VectorXcd& phi, const FockVector& psi) {
    check_phi(phi, psi);
    const FockSpace& sp = *psi.space();
    FockVector out(psi.space());
    if (psi.overflow()) out.mark_overflow();
    for (std::size_t p = 1; p <= sp.cutoff(); ++p) {
        const auto& basis = sp.basis(p);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Complex c = psi.sector(p)(b);
            if (c == Complex(0.0)) continue;
            for (std::size_t i = 0; i < sp.dim(); ++i) {
                if (basis[b][i] == 0 || phi(i) == Complex(0.0)) continue;
                Occupation n = basis[b];
                const double w = std::sqrt(static_cast<double>(n[i]));
                n[i] -= 1;
                out.at(n) += std::conj(phi(i)) * w * c;
            }
        }
    }
    return out;
}

FockVector number(const FockVector& psi) {
    FockVector out = psi;
    for (std::size_t p = 0; p <= psi.space()->cutoff(); ++p) out.sector(p) *= static_cast<double>(p);
    return out;
}

FockVector second_quantize(const Eigen::MatrixXcd& U, const FockVector& psi, const Tolerances& tol) {
    const FockSpace& sp = *psi.space();
    const auto d = static_cast<Eigen::Index>(sp.dim());
    if (U.rows() != d || U.cols() != d) throw std::invalid_argument("second_quantize: dimension mismatch");
    const double defect = (U.adjoint() * U - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > tol.eps_linear) throw std::invalid_argument("second_quantize: one-particle map is not unitary");

    FockVector out(psi.space());
    for (std::size_t p = 0; p <= sp.cutoff(); ++p) {
        const auto& basis = sp.basis(p);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Complex c = psi.sector(p)(b);
            if (c == Complex(0.0)) continue;
            // |n> = prod_i a+(e_i)^{n_i} / sqrt(n_i!) |0>, and Gamma(U) a+(e_i) Gamma(U)* = a+(U e_i)
            FockVector v = vacuum(psi.space());
            for (Eigen::Index i = 0; i < d; ++i) {
                const Eigen::VectorXcd col = U.col(i);
                for (int r = 1; r <= basis[b][static_cast<std::size_t>(i)]; ++r)
                    v = (1.0 / std::sqrt(static_cast<double>(r))) * create(col, v);
            }
            out = out + c * v;
        }
    }
    if (psi.overflow()) out.mark_overflow();
    return out;
}

Eigen::MatrixXcd duality_one_particle(std::size_t d, int k) {
    if (d == 0 || d % 2 != 0) throw std::invalid_argument("duality_one_particle: dimension must be even and positive");
    const auto h = static_cast<Eigen::Index>(d / 2);
    const double s = (static_cast<long>(k) * k) % 2 == 0 ? -1.0 : 1.0;
    Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(h * 2, h * 2);
    V.topRightCorner(h, h) = s * Eigen::MatrixXcd::Identity(h, h);
    V.bottomLeftCorner(h, h) = Eigen::MatrixXcd::Identity(h, h);
    return V;
}

Eigen::MatrixXcd operator_matrix(const FockSpacePtr& space,
                                 const std::function<FockVector(const FockVector&)>& op) {
    const auto n = static_cast<Eigen::Index>(space->total_size());
    Eigen::MatrixXcd M(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e(j) = 1.0;
        M.col(j) = op(FockVector::unflatten(space, e)).flatten();
    }
    return M;
}

Eigen::MatrixXcd field_operator(const FockSpacePtr& space, const Eigen::VectorXcd& v) {
    return operator_matrix(space, [&v](const FockVector& x) {
        return (1.0 / std::sqrt(2.0)) * (create(v, x) + annihilate(v, x));
    });
}

Eigen::MatrixXcd weyl_operator(const FockSpacePtr& space, const Eigen::VectorXcd& v) {
    const Eigen::MatrixXcd phi = field_operator(space, v);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(phi);
    const Eigen::VectorXcd phases = (Complex(0.0, 1.0) * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

FockVector symmetric_tensor_to_fock(const FockSpacePtr& space, std::size_t p, const Eigen::VectorXcd& tensor) {
    const std::size_t d = space->dim();
    if (p > space->cutoff()) throw std::invalid_argument("symmetric_tensor_to_fock: sector above cutoff");
    std::size_t size = 1;
    for (std::size_t i = 0; i < p; ++i) size *= d;
    if (static_cast<std::size_t>(tensor.size()) != size) throw std::invalid_argument("symmetric_tensor_to_fock: wrong tensor size");

    double pfact = 1.0;
    for (std::size_t i = 2; i <= p; ++i) pfact *= static_cast<double>(i);
    FockVector out(space);
    std::vector<std::size_t> idx(p, 0);
    for (std::size_t flat = 0; flat < size; ++flat) {
        std::size_t rem = flat;
        Occupation n(d, 0);
        for (std::size_t a = p; a-- > 0;) {
            idx[a] = rem % d;
            rem /= d;
            n[idx[a]] += 1;
        }
        double nfact = 1.0;
        for (int a : n)
            for (int r = 2; r <= a; ++r) nfact *= r;
        out.at(n) += std::sqrt(nfact / pfact) * tensor(static_cast<Eigen::Index>(flat));
    }
    return out;
}

}  // namespace dcqft
