#pragma once

#include <Eigen/Dense>

#include <vector>

#include "dcqft/core_numerics.hpp"
#include "dcqft/topological_sector.hpp"

namespace dcqft {

enum class SplittingCase { general, self_dual };

// Real lifts of the pairing values that the splitting correction has to cancel.
// general:   lifts(i, j) lifts <I h~'_j, h_i>, shape n x n_tilde
// self_dual: lifts(i, j) lifts <h'_i, h'_j>,   shape n x n, m = 2k
struct SplittingModel {
    std::size_t n = 0;
    std::size_t n_tilde = 0;
    int k = 1;
    int m = 2;
    SplittingCase kind = SplittingCase::general;
    Eigen::MatrixXd lifts;

    void validate() const;
};

// Row i lists the dual-basis components of the i-th correction class, reduced to [0, 1).
// general: u_components(i, j) is component i of u~_j.
// self_dual: u_components(i, j) is component j of u_i; the same matrix serves both
// halves of the splitting.
struct CorrectionResult {
    Eigen::MatrixXd u_components;
};

CorrectionResult correct_x_general(const SplittingModel& model);
CorrectionResult correct_x_duality(const SplittingModel& model, const Tolerances& tol = {});

// Corrected pairing matrix as real numbers; every entry is an integer for a valid correction.
Eigen::MatrixXd corrected_pairing(const SplittingModel& model, const CorrectionResult& r);
double corrected_pairing_residual(const SplittingModel& model, const CorrectionResult& r);

// Componentwise negation of the offending pairing values.
TorusVector correct_a(const TorusVector& pairings);
TorusVector correct_b(const TorusVector& pairings);

// sum_i v_i (p_i + delta_i) - eps sum_j vt_j (pt_j + deltat_j), as a distance from 0 mod 1.
double orthogonality_residual(const TorusVector& pairing_h, const TorusVector& delta_h,
                              const TorusVector& pairing_ht, const TorusVector& delta_ht, const IntVector& v,
                              const IntVector& vt, int epsilon);

}  // namespace dcqft
