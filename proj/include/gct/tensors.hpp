#pragma once

#include <array>
#include <string>
#include <vector>

#include "gct/bigint.hpp"
#include "gct/matrix.hpp"
#include "gct/rng.hpp"
#include "gct/stabilizer_invariants.hpp"

namespace gct {

// w = sum_s a_s (x) b_s (x) c_s with exact integer entries. The term count is
// a rank upper bound.
struct RankOneDecomposition {
    std::array<int, 3> format{0, 0, 0};
    struct Term {
        std::vector<BigInt> a, b, c;
    };
    std::vector<Term> terms;
};

// One invertible integer matrix per factor.
struct GroupElement {
    IntMat g1, g2, g3;
};

RankOneDecomposition unit_tensor(int m);

// Terms e_ij (x) e_jk (x) e_ki over format (n1 n2, n2 n3, n3 n1); the pair
// (i, j) flattens row-major to (i-1) n2 + j, and cyclically for the others.
RankOneDecomposition matmul_tensor(const MatmulFormat& fmt);

// A seven-term decomposition of the 2x2 matrix multiplication tensor with
// entries in {-1, 0, 1}; checked against matmul_tensor(2,2,2) at construction.
RankOneDecomposition strassen_decomposition();

GroupElement identity_group_element(const std::array<int, 3>& format);
GroupElement random_group_element(const std::array<int, 3>& format, int bound, unsigned long long seed);

RankOneDecomposition apply_group(const GroupElement& g, const RankOneDecomposition& w);

// Entry (p,q,r) = sum_s a_s[p] b_s[q] c_s[r], flattened with r fastest.
// Guarded by max_cells.
std::vector<BigInt> dense_expand(const RankOneDecomposition& w, long long max_cells = 1 << 22);

// Line format: "format m1 m2 m3" header, then one term per line,
// "a1,...,am1 | b1,...,bm2 | c1,...,cm3".
std::string serialize_decomposition(const RankOneDecomposition& w);
RankOneDecomposition parse_decomposition(const std::string& text);

// Named decompositions for the CLI: "unit:m", "matmul:n1,n2,n3", "strassen".
RankOneDecomposition decomposition_by_name(const std::string& name);

// FNV-1a over the canonical serialization, as fixed-width hex.
std::string decomposition_digest(const RankOneDecomposition& w);

}
