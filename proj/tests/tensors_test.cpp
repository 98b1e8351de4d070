#include "doctest.h"

#include <array>
#include <stdexcept>
#include <vector>

#include "gct/matrix.hpp"
#include "gct/rng.hpp"
#include "gct/tensors.hpp"
#include "support/oracles.hpp"

using namespace gct;

namespace {

// Contraction of a dense tensor by one matrix per factor, independent of
// apply_group's term-wise route.
std::vector<BigInt> dense_transform(const GroupElement& g, const std::vector<BigInt>& dense,
                                    const std::array<int, 3>& format) {
    const int m1 = format[0], m2 = format[1], m3 = format[2];
    std::vector<BigInt> out(static_cast<size_t>(m1) * m2 * m3);
    for (int p = 0; p < m1; ++p)
        for (int q = 0; q < m2; ++q)
            for (int r = 0; r < m3; ++r) {
                BigInt acc = 0;
                for (int i = 0; i < m1; ++i)
                    for (int j = 0; j < m2; ++j)
                        for (int k = 0; k < m3; ++k)
                            acc += g.g1.at(p, i) * g.g2.at(q, j) * g.g3.at(r, k) *
                                   dense[(static_cast<size_t>(i) * m2 + j) * m3 + k];
                out[(static_cast<size_t>(p) * m2 + q) * m3 + r] = acc;
            }
    return out;
}

}  // namespace

TEST_SUITE("tensors") {

TEST_CASE("seven terms expand to the matrix multiplication tensor") {
    auto strassen = strassen_decomposition();
    auto direct = matmul_tensor(MatmulFormat{2, 2, 2});
    CHECK(strassen.terms.size() == 7);
    CHECK(direct.terms.size() == 8);
    CHECK(strassen.format == direct.format);
    CHECK(dense_expand(strassen) == dense_expand(direct));
    for (const auto& term : strassen.terms)
        for (const auto* v : {&term.a, &term.b, &term.c})
            for (const BigInt& x : *v) CHECK((x == 0 || x == 1 || x == -1));
}

TEST_CASE("matmul dense entries are the triple product deltas") {
    MatmulFormat fmt{2, 3, 2};
    auto dense = dense_expand(matmul_tensor(fmt));
    const int m1 = 6, m2 = 6, m3 = 4;
    REQUIRE(static_cast<int>(dense.size()) == m1 * m2 * m3);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int jj = 1; jj <= 3; ++jj)
                for (int k = 1; k <= 2; ++k)
                    for (int kk = 1; kk <= 2; ++kk)
                        for (int ii = 1; ii <= 2; ++ii) {
                            int p = (i - 1) * 3 + (j - 1);
                            int q = (jj - 1) * 2 + (k - 1);
                            int r = (kk - 1) * 2 + (ii - 1);
                            BigInt want = (j == jj && k == kk && i == ii) ? 1 : 0;
                            CHECK(dense[(static_cast<size_t>(p) * m2 + q) * m3 + r] == want);
                        }
}

TEST_CASE("unit tensor is the diagonal") {
    auto u = unit_tensor(3);
    auto dense = dense_expand(u);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(dense[(static_cast<size_t>(i) * 3 + j) * 3 + k] ==
                      ((i == j && j == k) ? 1 : 0));
}

TEST_CASE("digest of the seven-term decomposition is stable") {
    CHECK(decomposition_digest(strassen_decomposition()) == "d03833be5ea79bf2");
}

TEST_CASE("serialization round-trips") {
    auto w = testsupport::random_decomposition({3, 2, 4}, 5, 9, 5150);
    CHECK(parse_decomposition(serialize_decomposition(w)).format == w.format);
    auto again = parse_decomposition(serialize_decomposition(w));
    CHECK(dense_expand(again) == dense_expand(w));
    CHECK(decomposition_digest(again) == decomposition_digest(w));

    CHECK_THROWS(parse_decomposition("format 2 2\n"));
    CHECK_THROWS(parse_decomposition("format 2 2 2\n1,0 | 1,0\n"));
    CHECK_THROWS(parse_decomposition("format 2 2 2\n1,0 | 1,0 | 1\n"));
    CHECK_THROWS(parse_decomposition("nonsense"));
}

TEST_CASE("named decompositions") {
    CHECK(decomposition_by_name("strassen").terms.size() == 7);
    CHECK(decomposition_by_name("unit:4").terms.size() == 4);
    auto mm = decomposition_by_name("matmul:2,2,2");
    CHECK(mm.terms.size() == 8);
    CHECK(dense_expand(mm) == dense_expand(matmul_tensor(MatmulFormat{2, 2, 2})));
    CHECK_THROWS(decomposition_by_name("mystery"));
    CHECK_THROWS(decomposition_by_name("unit:0"));
}

TEST_CASE("group action distributes over the dense expansion") {
    for (int trial = 0; trial < 6; ++trial) {
        std::array<int, 3> fmt{3, 2, 4};
        auto w = testsupport::random_decomposition(fmt, 3, 4, derive_seed(977, trial));
        GroupElement g = random_group_element(fmt, 2, derive_seed(978, trial));
        CHECK(dense_expand(apply_group(g, w)) == dense_transform(g, dense_expand(w), fmt));
    }
}

TEST_CASE("identity group element fixes everything") {
    auto w = strassen_decomposition();
    GroupElement id = identity_group_element(w.format);
    CHECK(dense_expand(apply_group(id, w)) == dense_expand(w));
}

TEST_CASE("random group elements are invertible over the rationals") {
    for (int trial = 0; trial < 8; ++trial) {
        GroupElement g = random_group_element({3, 3, 3}, 2, derive_seed(31, trial));
        for (const IntMat* m : {&g.g1, &g.g2, &g.g3}) CHECK(det_bareiss(*m) != 0);
    }
}

TEST_CASE("signed diagonal and permutation symmetries fix the unit tensor") {
    const int m = 3;
    auto u = unit_tensor(m);
    auto dense = dense_expand(u);

    // diagonal (a, b, c) with a_i b_i c_i = 1, integer entries
    GroupElement diag = identity_group_element(u.format);
    std::vector<int> a = {1, -1, 1}, b = {1, 1, -1};
    for (int i = 0; i < m; ++i) {
        diag.g1.at(i, i) = a[static_cast<size_t>(i)];
        diag.g2.at(i, i) = b[static_cast<size_t>(i)];
        diag.g3.at(i, i) = a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    }
    CHECK(dense_expand(apply_group(diag, u)) == dense);

    // same permutation in all three factors
    GroupElement perm{IntMat(m, m), IntMat(m, m), IntMat(m, m)};
    std::vector<int> img = {2, 0, 1};
    for (int i = 0; i < m; ++i) {
        perm.g1.at(img[static_cast<size_t>(i)], i) = 1;
        perm.g2.at(img[static_cast<size_t>(i)], i) = 1;
        perm.g3.at(img[static_cast<size_t>(i)], i) = 1;
    }
    CHECK(dense_expand(apply_group(perm, u)) == dense);
}

TEST_CASE("the matmul stabilizer triple fixes the matrix multiplication tensor") {
    // Phi(a1, a2, a3) acts by (a1^{-T} (x) a2, a2^{-T} (x) a3, a3^{-T} (x) a1).
    auto mm = matmul_tensor(MatmulFormat{2, 2, 2});
    auto dense = dense_expand(mm);

    auto inv_transpose_2x2_unimodular = [](const IntMat& m) {
        // for det = 1: inverse is (d, -b; -c, a); transpose afterwards
        IntMat r(2, 2);
        r.at(0, 0) = m.at(1, 1);
        r.at(0, 1) = -m.at(1, 0);
        r.at(1, 0) = -m.at(0, 1);
        r.at(1, 1) = m.at(0, 0);
        return r;
    };

    std::vector<IntMat> as;
    {
        IntMat a(2, 2);
        a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(1, 0) = 0; a.at(1, 1) = 1;
        as.push_back(a);
        IntMat b(2, 2);
        b.at(0, 0) = 2; b.at(0, 1) = 1; b.at(1, 0) = 1; b.at(1, 1) = 1;
        as.push_back(b);
        IntMat c(2, 2);
        c.at(0, 0) = 1; c.at(0, 1) = 0; c.at(1, 0) = -3; c.at(1, 1) = 1;
        as.push_back(c);
    }
    for (const IntMat& a1 : as)
        for (const IntMat& a2 : as)
            for (const IntMat& a3 : as) {
                REQUIRE(det_bareiss(a1) == 1);
                GroupElement g{kron_product(inv_transpose_2x2_unimodular(a1), a2),
                               kron_product(inv_transpose_2x2_unimodular(a2), a3),
                               kron_product(inv_transpose_2x2_unimodular(a3), a1)};
                CHECK(dense_expand(apply_group(g, mm)) == dense);
            }
}

TEST_CASE("dense expansion refuses oversized formats") {
    RankOneDecomposition w;
    w.format = {1 << 11, 1 << 11, 4};
    CHECK_THROWS(dense_expand(w));
}

}
