#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dcqft {

// Product of spheres S^d, d >= 1, written like "S1xS2" or "T3" (= S1xS1xS1).
class Space {
public:
    static Space parse(const std::string& text);
    static Space product(std::vector<int> sphere_dims);

    const std::vector<int>& sphere_dims() const { return dims_; }
    int dimension() const;
    // Betti numbers b_0 .. b_dim
    std::vector<long> betti_sequence() const;
    std::string name() const;

private:
    std::vector<int> dims_;
};

long betti(const Space& space, int degree);
bool torsion_free(const Space& space, int degree);

// Ranks (n, n_tilde) of the topological sector on R x space for degree k in dimension m.
std::pair<long, long> topological_ranks(const Space& cauchy_surface, int k, int m);

}  // namespace dcqft
