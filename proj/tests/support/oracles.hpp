#pragma once

// Independent reference computations for the test suite. Everything here is
// deliberately naive: materialized sparse tensors, full symmetrizer sums and
// closed-form product formulas, sharing no code with the library paths they
// check beyond basic types.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "gct/bigint.hpp"
#include "gct/hwv.hpp"
#include "gct/kronecker.hpp"
#include "gct/partition.hpp"
#include "gct/permutation.hpp"
#include "gct/rng.hpp"
#include "gct/tableaux.hpp"
#include "gct/tensors.hpp"

namespace gct::testsupport {

// Sparse vector in (C^m)^{(x)d}: 0-based basis index tuple -> coefficient.
using SparseVec = std::map<std::vector<int>, BigInt>;

// (x)_j (e_{T(1,j)} ^ ... ^ e_{T(L_j,j)}) with slots numbered columnwise;
// each column expanded as the signed sum over its orderings.
inline SparseVec column_wedge_vector(const Tableau& t) {
    Partition mu = transpose(t.shape);
    std::vector<std::vector<int>> cols;
    for (int j = 0; j < (int)mu.parts().size(); ++j) {
        std::vector<int> col;
        for (int i = 0; i < mu.parts()[j]; ++i) col.push_back(t.at(i, j));
        cols.push_back(col);
    }
    SparseVec cur;
    cur[std::vector<int>()] = 1;
    for (auto& col : cols) {
        int len = (int)col.size();
        std::vector<int> ord(len);
        for (int i = 0; i < len; ++i) ord[i] = i;
        SparseVec next;
        do {
            int sign = 1;
            for (int i = 0; i < len; ++i)
                for (int k = i + 1; k < len; ++k)
                    if (ord[i] > ord[k]) sign = -sign;
            for (auto& [idx, coef] : cur) {
                std::vector<int> nidx = idx;
                for (int i = 0; i < len; ++i) nidx.push_back(col[ord[i]] - 1);
                next[nidx] += sign * coef;
            }
        } while (std::next_permutation(ord.begin(), ord.end()));
        cur = std::move(next);
    }
    SparseVec out;
    for (auto& [idx, c] : cur)
        if (c != 0) out[idx] = c;
    return out;
}

// Row-symmetrized column wedge: the realization in which the straightening
// relations hold as exact vector identities.
inline SparseVec ambient_tableau_vector(const Tableau& t) {
    SparseVec cur = column_wedge_vector(t);
    Partition mu = transpose(t.shape);
    std::vector<std::vector<int>> row_slots((size_t)t.shape.len());
    int s = 0;
    for (int j = 0; j < (int)mu.parts().size(); ++j)
        for (int i = 0; i < mu.parts()[j]; ++i) row_slots[(size_t)i].push_back(s++);

    SparseVec sym;
    std::vector<std::vector<int>> perms(row_slots.size());
    for (size_t r = 0; r < row_slots.size(); ++r) {
        perms[r].resize(row_slots[r].size());
        for (size_t i = 0; i < perms[r].size(); ++i) perms[r][i] = (int)i;
    }
    std::function<void(size_t)> rec = [&](size_t r) {
        if (r == perms.size()) {
            for (auto& [idx, c] : cur) {
                std::vector<int> nidx(idx.size());
                for (size_t rr = 0; rr < row_slots.size(); ++rr)
                    for (size_t i = 0; i < row_slots[rr].size(); ++i)
                        nidx[(size_t)row_slots[rr][(size_t)perms[rr][i]]] = idx[(size_t)row_slots[rr][i]];
                sym[nidx] += c;
            }
            return;
        }
        std::sort(perms[r].begin(), perms[r].end());
        do { rec(r + 1); } while (std::next_permutation(perms[r].begin(), perms[r].end()));
    };
    rec(0);

    SparseVec out;
    for (auto& [idx, c] : sym)
        if (c != 0) out[idx] = c;
    return out;
}

inline SparseVec permute_slots(const SparseVec& x, const Perm& pi, int d) {
    SparseVec out;
    for (auto& [idx, c] : x) {
        std::vector<int> nidx((size_t)d);
        for (int q = 0; q < d; ++q) nidx[(size_t)pi.apply(q)] = idx[(size_t)q];
        out[nidx] += c;
    }
    return out;
}

// Direct contraction of the permuted canonical wedge vectors against the
// dense expansion of w; an end-to-end reference for hwv evaluate.
inline BigInt dense_oracle_evaluate(const WeightTriple& tr, const PermTriple& pt,
                                    const RankOneDecomposition& w) {
    int d = tr.degree;
    for (int i = 0; i < 3; ++i)
        if (tr.lambda(i).len() > w.format[(size_t)i]) return 0;
    std::array<SparseVec, 3> x;
    for (int i = 0; i < 3; ++i)
        x[(size_t)i] = permute_slots(column_wedge_vector(canonical_tableau(tr.lambda(i))), pt.perm(i), d);
    std::vector<BigInt> dense = dense_expand(w);
    int m2 = w.format[1], m3 = w.format[2];
    BigInt total = 0;
    for (auto& [j, cj] : x[0])
        for (auto& [k, ck] : x[1]) {
            BigInt pre = cj * ck;
            for (auto& [l, cl] : x[2]) {
                BigInt prod = pre * cl;
                for (int t = 0; t < d && prod != 0; ++t)
                    prod *= dense[((size_t)j[(size_t)t] * (size_t)m2 + (size_t)k[(size_t)t]) * (size_t)m3 +
                                  (size_t)l[(size_t)t]];
                total += prod;
            }
        }
    return total;
}

// Weyl dimension formula for GL_m: prod_{i<j} (l_i - l_j + j - i)/(j - i).
inline BigInt weyl_dim(const Partition& lambda, int m) {
    if (lambda.len() > m) return 0;
    std::vector<int> l = padded(lambda, m);
    Rational dim = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            dim *= Rational(l[(size_t)i] - l[(size_t)j] + j - i, j - i);
    if (denominator(dim) != 1) throw std::logic_error("weyl_dim not integral");
    return numerator(dim);
}

inline RankOneDecomposition random_decomposition(std::array<int, 3> fmt, int rank, long long bound,
                                                 unsigned long long seed) {
    Rng rng(seed);
    RankOneDecomposition w;
    w.format = fmt;
    for (int t = 0; t < rank; ++t) {
        RankOneDecomposition::Term term;
        auto fill = [&](std::vector<BigInt>& v, int n) {
            v.resize((size_t)n);
            for (int i = 0; i < n; ++i) v[(size_t)i] = BigInt(rng.between(-bound, bound));
        };
        fill(term.a, fmt[0]);
        fill(term.b, fmt[1]);
        fill(term.c, fmt[2]);
        w.terms.push_back(std::move(term));
    }
    return w;
}

// All length-m nonnegative integer vectors summing to d, lexicographic.
inline std::vector<std::vector<int>> compositions(int d, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur((size_t)m);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == m - 1) {
            cur[(size_t)pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[(size_t)pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (m > 0) rec(0, d);
    return out;
}

}
