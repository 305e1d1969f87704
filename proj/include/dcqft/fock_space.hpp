#pragma once

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "dcqft/core_numerics.hpp"

namespace dcqft {

using Occupation = std::vector<int>;

// Symmetric Fock space over C^d truncated at `cutoff` particles, in the
// occupation-number basis.
class FockSpace {
public:
    FockSpace(std::size_t dim, std::size_t cutoff);

    std::size_t dim() const { return dim_; }
    std::size_t cutoff() const { return cutoff_; }
    const std::vector<Occupation>& basis(std::size_t p) const { return sectors_.at(p); }
    std::size_t sector_size(std::size_t p) const { return sectors_.at(p).size(); }
    // throws if the occupation does not belong to the space
    std::size_t index(const Occupation& n) const;
    bool contains(const Occupation& n) const;
    std::size_t total_size() const { return total_; }
    std::size_t offset(std::size_t p) const { return offsets_.at(p); }

private:
    std::size_t dim_;
    std::size_t cutoff_;
    std::vector<std::vector<Occupation>> sectors_;
    std::vector<std::map<Occupation, std::size_t>> lookup_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

using FockSpacePtr = std::shared_ptr<const FockSpace>;

class FockVector {
public:
    explicit FockVector(FockSpacePtr space);

    const FockSpacePtr& space() const { return space_; }
    const Eigen::VectorXcd& sector(std::size_t p) const { return sectors_.at(p); }
    Eigen::VectorXcd& sector(std::size_t p) { return sectors_.at(p); }
    Complex& at(const Occupation& n);
    Complex at(const Occupation& n) const;

    // Set when an operation produced weight above the cutoff, which was dropped.
    bool overflow() const { return overflow_; }
    void mark_overflow() { overflow_ = true; }

    Eigen::VectorXcd flatten() const;
    static FockVector unflatten(FockSpacePtr space, const Eigen::VectorXcd& v);

private:
    FockSpacePtr space_;
    std::vector<Eigen::VectorXcd> sectors_;
    bool overflow_ = false;
};

FockVector vacuum(const FockSpacePtr& space);
FockVector basis_state(const FockSpacePtr& space, const Occupation& n);

FockVector operator+(const FockVector& a, const FockVector& b);
FockVector operator-(const FockVector& a, const FockVector& b);
FockVector operator*(Complex s, const FockVector& a);
Complex inner(const FockVector& a, const FockVector& b);
double norm(const FockVector& a);

FockVector create(const Eigen::VectorXcd& phi, const FockVector& psi);
// antilinear in phi
FockVector annihilate(const Eigen::VectorXcd& phi, const FockVector& psi);
FockVector number(const FockVector& psi);

FockVector second_quantize(const Eigen::MatrixXcd& U, const FockVector& psi, const Tolerances& tol = {});
// [[0, s I], [I, 0]] with s = -(-1)^{k^2}: (f, f~) -> (s f~, f)
Eigen::MatrixXcd duality_one_particle(std::size_t d, int k);

// Matrix of a linear map in the flattened basis.
Eigen::MatrixXcd operator_matrix(const FockSpacePtr& space, const std::function<FockVector(const FockVector&)>& op);

// Phi(v) = 2^{-1/2} (a+(v) + a(v)) and exp(i Phi(v)), both on the truncated space.
Eigen::MatrixXcd field_operator(const FockSpacePtr& space, const Eigen::VectorXcd& v);
Eigen::MatrixXcd weyl_operator(const FockSpacePtr& space, const Eigen::VectorXcd& v);

// Test utility: symmetrize a raw p-fold tensor over C^d (row-major multi-index) and
// return its occupation-number coordinates.
FockVector symmetric_tensor_to_fock(const FockSpacePtr& space, std::size_t p, const Eigen::VectorXcd& tensor);

}  // namespace dcqft
