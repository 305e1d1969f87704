#include "dcqft/splittings.hpp"

#include <cmath>
#include <stdexcept>

namespace dcqft {

namespace {

double reduce(double x) { return torus_from_real(x).rep(); }

int graded_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

void SplittingModel::validate() const {
    if (k < 0 || m < k) throw std::invalid_argument("splitting model: need 0 <= k <= m");
    const std::size_t cols = kind == SplittingCase::general ? n_tilde : n;
    if (static_cast<std::size_t>(lifts.rows()) != n || static_cast<std::size_t>(lifts.cols()) != cols)
        throw std::invalid_argument("splitting model: lift matrix has the wrong shape");
    if (!lifts.allFinite()) throw std::invalid_argument("splitting model: non-finite lift");
}

CorrectionResult correct_x_general(const SplittingModel& model) {
    if (model.kind != SplittingCase::general) throw std::invalid_argument("correct_x_general: not a general model");
    model.validate();
    CorrectionResult r;
    r.u_components = model.lifts.unaryExpr([](double c) { return reduce(-c); });
    return r;
}

CorrectionResult correct_x_duality(const SplittingModel& model, const Tolerances& tol) {
    if (model.kind != SplittingCase::self_dual) throw std::invalid_argument("correct_x_duality: not a self-dual model");
    if (model.n != model.n_tilde || model.m != 2 * model.k)
        throw std::invalid_argument("correct_x_duality: need n = n_tilde and m = 2k");
    model.validate();
    const std::size_t n = model.n;
    const int s = graded_sign(model.k);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (s < 0) {
            if (torus_norm(model.lifts(i, i)) > tol.eps_torus)
                throw std::invalid_argument("correct_x_duality: diagonal pairing must vanish for odd k");
        } else {
            c(i, i) = model.lifts(i, i);
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (torus_norm(model.lifts(j, i) - s * model.lifts(i, j)) > tol.eps_torus)
                throw std::invalid_argument("correct_x_duality: pairing is not graded-symmetric");
            c(i, j) = model.lifts(i, j);
            c(j, i) = s * model.lifts(i, j);
        }
    }
    CorrectionResult r;
    r.u_components = c.unaryExpr([](double x) { return reduce(-0.5 * x); });
    return r;
}

Eigen::MatrixXd corrected_pairing(const SplittingModel& model, const CorrectionResult& r) {
    model.validate();
    if (r.u_components.rows() != model.lifts.rows() || r.u_components.cols() != model.lifts.cols())
        throw std::invalid_argument("corrected_pairing: shape mismatch");
    if (model.kind == SplittingCase::general) return model.lifts + r.u_components;
    const int s = graded_sign(model.k);
    return model.lifts + r.u_components + s * r.u_components.transpose();
}

double corrected_pairing_residual(const SplittingModel& model, const CorrectionResult& r) {
    const Eigen::MatrixXd p = corrected_pairing(model, r);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j) worst = std::max(worst, torus_norm(p(i, j)));
    return worst;
}

TorusVector correct_a(const TorusVector& pairings) {
    TorusVector out;
    out.reserve(pairings.size());
    for (auto p : pairings) out.push_back(-p);
    return out;
}

TorusVector correct_b(const TorusVector& pairings) { return correct_a(pairings); }

double orthogonality_residual(const TorusVector& pairing_h, const TorusVector& delta_h,
                              const TorusVector& pairing_ht, const TorusVector& delta_ht, const IntVector& v,
                              const IntVector& vt, int epsilon) {
    if (pairing_h.size() != delta_h.size() || pairing_h.size() != v.size() || pairing_ht.size() != delta_ht.size() ||
        pairing_ht.size() != vt.size())
        throw std::invalid_argument("orthogonality_residual: shape mismatch");
    TorusValue s;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * (pairing_h[i] + delta_h[i]);
    TorusValue st;
    for (std::size_t j = 0; j < vt.size(); ++j) st += vt[j] * (pairing_ht[j] + delta_ht[j]);
    return torus_distance(s - static_cast<std::int64_t>(epsilon) * st, TorusValue{});
}

}  // namespace dcqft
