#include <doctest.h>

#include "dcqft/cohomology_tables.hpp"

using namespace dcqft;

namespace {

// rank of H^j of a product of spheres: number of subsets of factors whose dimensions sum to j
long subset_count(const std::vector<int>& dims, int j) {
    long c = 0;
    for (unsigned mask = 0; mask < (1u << dims.size()); ++mask) {
        int s = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (mask & (1u << i)) s += dims[i];
        if (s == j) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("worked examples") {
    CHECK(betti(Space::parse("S1xS2"), 2) == 1);
    CHECK(betti(Space::parse("T3"), 2) == 3);
    CHECK(betti(Space::parse("S3"), 2) == 0);
    CHECK(betti(Space::parse("S1"), 1) == 1);
    CHECK(betti(Space::parse("T3"), 7) == 0);
    CHECK(torsion_free(Space::parse("S1"), 1));
    CHECK(torsion_free(Space::parse("T3"), 2));
    CHECK(torsion_free(Space::parse("S1xS2"), 2));
    CHECK(Space::parse("T2xS2").name() == "S1xS1xS2");
    CHECK(Space::parse("S1xS2").dimension() == 3);
}

TEST_CASE("topological ranks") {
    CHECK(topological_ranks(Space::parse("S1"), 1, 2) == std::pair<long, long>{1, 1});
    CHECK(topological_ranks(Space::parse("T3"), 2, 4) == std::pair<long, long>{3, 3});
    CHECK(topological_ranks(Space::parse("S1xS2"), 2, 4) == std::pair<long, long>{1, 1});
    CHECK(topological_ranks(Space::parse("S3"), 2, 4) == std::pair<long, long>{0, 0});
    CHECK_THROWS(topological_ranks(Space::parse("S3"), 3, 2));
}

TEST_CASE("parse errors") {
    CHECK_THROWS(Space::parse(""));
    CHECK_THROWS(Space::parse("RP2"));
    CHECK_THROWS(Space::parse("S0"));
    CHECK_THROWS(Space::parse("S1x"));
    CHECK_THROWS(Space::parse("Sx"));
    CHECK_THROWS(betti(Space::parse("S2"), -1));
}

TEST_CASE("Kunneth against subset counting and Poincare duality") {
    const std::vector<std::vector<int>> cases = {{1}, {2}, {1, 1}, {1, 2}, {1, 1, 1}, {2, 3}, {1, 1, 2, 3}, {4, 1, 1}};
    for (const auto& dims : cases) {
        const Space s = Space::product(dims);
        const int n = s.dimension();
        CHECK(betti(s, 0) == 1);
        for (int j = 0; j <= n; ++j) {
            CHECK(betti(s, j) == subset_count(dims, j));
            CHECK(betti(s, j) == betti(s, n - j));
        }
    }
}
