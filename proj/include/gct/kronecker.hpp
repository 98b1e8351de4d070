#pragma once

#include <array>
#include <vector>

#include "gct/bigint.hpp"
#include "gct/partition.hpp"

namespace gct {

// Triple of same-size partitions with an ambient format (m1, m2, m3).
struct WeightTriple {
    Partition lambda1, lambda2, lambda3;
    int degree = 0;
    std::array<int, 3> format{0, 0, 0};

    const Partition& lambda(int i) const {
        return i == 0 ? lambda1 : (i == 1 ? lambda2 : lambda3);
    }
    bool operator==(const WeightTriple&) const = default;
};

// Validates equal sizes and len(lambda_i) <= format_i.
WeightTriple make_weight_triple(Partition l1, Partition l2, Partition l3, std::array<int, 3> format);

// g(lambda, mu, nu) by the class-weighted character sum over S_d; the final
// division by d! is asserted exact.
BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

// Independent oracle: dimension of the invariant subspace of the explicit
// tensor-product representation, via the kernel of (rho(g) - id) for the two
// standard generators of S_d. d <= 5.
BigInt kronecker_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu);

// All triples of degree <= max_degree within the format that have g != 0,
// ordered by degree, then by enumeration order of the three partitions.
std::vector<WeightTriple> kronecker_semigroup_points(std::array<int, 3> format, int max_degree);

}
