#include "gct/stabilizer_invariants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "gct/error.hpp"
#include "gct/matrix.hpp"
#include "gct/permutation.hpp"
#include "gct/rng.hpp"
#include "gct/symgroup.hpp"
#include "gct/tableaux.hpp"

namespace gct {

YoungSubgroup young_subgroup(const Partition& alpha, int slots) {
    if (alpha.len() > slots) throw std::invalid_argument("young_subgroup: weight exceeds slots");
    std::vector<int> vals = padded(alpha, slots);
    YoungSubgroup h;
    h.order = 1;
    int i = 0;
    while (i < slots) {
        int j = i;
        while (j < slots && vals[j] == vals[i]) ++j;
        h.block_sizes.push_back(j - i);
        h.order *= factorial(j - i);
        i = j;
    }
    return h;
}

namespace {

// Permutation of {1..m} realizing the given cycle types on consecutive blocks.
Perm block_class_representative(const std::vector<int>& block_sizes,
                                const std::vector<Partition>& types, int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    int offset = 0;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        int pos = offset;
        for (int part : types[b].parts()) {
            for (int t = 0; t < part; ++t) img[pos + t] = pos + (t + 1) % part;
            pos += part;
        }
        offset += block_sizes[b];
    }
    return Perm(img);
}

struct TraceKey {
    Partition lambda;
    std::vector<int> alpha;
    std::vector<int> sigma;
    auto operator<=>(const TraceKey&) const = default;
};

BigInt weight_space_trace(const Partition& lambda, const std::vector<int>& alpha, const Perm& sigma) {
    static std::map<TraceKey, BigInt> cache;
    static std::mutex mu;
    std::vector<int> img(sigma.degree());
    for (int i = 0; i < sigma.degree(); ++i) img[i] = sigma.apply(i);
    TraceKey key{lambda, alpha, img};
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BigInt tr = mat_trace(perm_action_matrix(sigma, lambda, alpha));
    std::scoped_lock lock(mu);
    return cache.emplace(std::move(key), std::move(tr)).first->second;
}

Partition meet3(const WeightTriple& t) {
    return meet(t.lambda1, meet(t.lambda2, t.lambda3));
}

void check_format(const WeightTriple& t, int m) {
    if (m < 1) throw std::invalid_argument("slot count must be positive");
    for (int i = 0; i < 3; ++i)
        if (t.lambda(i).len() > m)
            throw std::invalid_argument("weight triple does not fit in the slot count");
}

// All vectors of length m of nonnegative integers summing to d.
void compositions_rec(int d, int m, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if ((int)acc.size() == m - 1) {
        acc.push_back(d);
        out.push_back(acc);
        acc.pop_back();
        return;
    }
    for (int v = 0; v <= d; ++v) {
        acc.push_back(v);
        compositions_rec(d - v, m, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int d, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    compositions_rec(d, m, acc, out);
    return out;
}

}

BigInt stab_alpha_invariant_dim(const WeightTriple& triple, const Partition& alpha, int m) {
    check_format(triple, m);
    if (alpha.size() != triple.degree || alpha.len() > m || !dominance_leq(alpha, meet3(triple)))
        throw std::invalid_argument("stab_alpha_invariant_dim: weight not dominated in the slot count");

    YoungSubgroup h = young_subgroup(alpha, m);
    std::vector<int> apad = padded(alpha, m);

    // Cartesian product of per-block cycle types; each tuple is one conjugacy
    // class of the Young subgroup.
    std::vector<std::vector<Partition>> per_block;
    for (int b : h.block_sizes) per_block.push_back(enumerate_partitions(b, b));

    BigInt sum = 0, covered = 0;
    std::vector<size_t> idx(per_block.size(), 0);
    while (true) {
        std::vector<Partition> types;
        BigInt cls = 1;
        for (size_t b = 0; b < per_block.size(); ++b) {
            types.push_back(per_block[b][idx[b]]);
            cls *= class_size(types.back());
        }
        covered += cls;
        Perm rep = block_class_representative(h.block_sizes, types, m);
        BigInt prod = cls;
        for (int i = 0; i < 3 && prod != 0; ++i)
            prod *= weight_space_trace(triple.lambda(i), apad, rep);
        sum += prod;

        size_t b = 0;
        while (b < idx.size() && ++idx[b] == per_block[b].size()) idx[b++] = 0;
        if (b == idx.size()) break;
    }
    if (covered != h.order) throw defect_error("class sizes do not cover the Young subgroup");
    if (sum % h.order != 0) throw defect_error("invariant class sum not divisible by the group order");
    BigInt dim = sum / h.order;
    if (dim < 0) throw defect_error("negative invariant dimension");
    return dim;
}

UnitInvariantBreakdown unit_invariant_dim_breakdown(const WeightTriple& triple, int m) {
    check_format(triple, m);
    UnitInvariantBreakdown out;
    out.total = 0;
    for (const Partition& alpha : enumerate_dominated(meet3(triple), m)) {
        BigInt term = stab_alpha_invariant_dim(triple, alpha, m);
        out.total += term;
        out.terms.emplace_back(alpha, std::move(term));
    }
    return out;
}

BigInt unit_invariant_dim(const WeightTriple& triple, int m) {
    return unit_invariant_dim_breakdown(triple, m).total;
}

BigInt unit_invariant_dim_bruteforce(const WeightTriple& triple, int m) {
    check_format(triple, m);
    int d = triple.degree;
    if (m > 4 || d > 6) throw std::invalid_argument("unit_invariant_dim_bruteforce: size guard exceeded");

    auto alphas = compositions(d, m);
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    BigInt sum = 0;
    do {
        Perm pi = Perm(std::vector<int>(img));
        for (const auto& alpha : alphas) {
            bool fixed = true;
            for (int i = 0; i < m && fixed; ++i) fixed = alpha[pi.apply(i)] == alpha[i];
            if (!fixed) continue;
            BigInt prod = 1;
            for (int i = 0; i < 3 && prod != 0; ++i)
                prod *= mat_trace(perm_action_matrix(pi, triple.lambda(i), alpha));
            sum += prod;
        }
    } while (std::next_permutation(img.begin(), img.end()));
    BigInt order = factorial(m);
    if (sum % order != 0) throw defect_error("full-group invariant sum not divisible by m!");
    return sum / order;
}

BigInt matmul_invariant_dim(const Partition& l12, const Partition& l23, const Partition& l31,
                            const MatmulFormat& fmt) {
    if (fmt.n1 < 1 || fmt.n2 < 1 || fmt.n3 < 1)
        throw std::invalid_argument("matmul format entries must be positive");
    int d = l12.size();
    if (l23.size() != d || l31.size() != d)
        throw std::invalid_argument("matmul_invariant_dim: sizes differ");
    if (l12.len() > fmt.n1 * fmt.n2 || l23.len() > fmt.n2 * fmt.n3 || l31.len() > fmt.n3 * fmt.n1)
        throw std::invalid_argument("matmul_invariant_dim: partition exceeds flattened format");

    auto mus1 = enumerate_partitions(d, fmt.n1);
    auto mus2 = enumerate_partitions(d, fmt.n2);
    auto mus3 = enumerate_partitions(d, fmt.n3);
    BigInt sum = 0;
    for (const auto& mu2 : mus2)
        for (const auto& mu1 : mus1) {
            BigInt g12 = kronecker(l12, mu1, mu2);
            if (g12 == 0) continue;
            for (const auto& mu3 : mus3) {
                BigInt g23 = kronecker(l23, mu2, mu3);
                if (g23 == 0) continue;
                sum += g12 * g23 * kronecker(l31, mu3, mu1);
            }
        }
    return sum;
}

std::optional<Partition> regular_witness(const WeightTriple& triple, int m) {
    check_format(triple, m);
    if (triple.degree < 1) return std::nullopt;
    Partition bot = staircase(m, triple.degree);
    if (!is_regular({bot, m})) return std::nullopt;
    if (!dominance_leq(bot, meet3(triple))) return std::nullopt;
    return bot;
}

bool in_So_unit(const WeightTriple& triple, int m) {
    check_format(triple, m);
    // A regular dominated weight has trivial stabilizer, so its summand is a
    // product of Kostka numbers, positive by dominance; no matrices needed.
    if (regular_witness(triple, m)) return true;
    return unit_invariant_dim(triple, m) > 0;
}

BarrierLift barrier_lift(const WeightTriple& triple, int m) {
    check_format(triple, m);
    int bound = m * (m + 1) / 2 + m + 1;
    for (int k = 0;; ++k) {
        if (k > bound) throw defect_error("barrier shift exceeded its proof bound");
        std::array<Partition, 3> shifted;
        for (int i = 0; i < 3; ++i) {
            std::vector<int> parts = padded(triple.lambda(i), m);
            for (int& p : parts) p += k;
            shifted[i] = Partition(parts);
        }
        WeightTriple lifted = make_weight_triple(shifted[0], shifted[1], shifted[2],
                                                 {m + 1, m + 1, m + 1});
        if (regular_witness(lifted, m + 1)) return BarrierLift{k, std::move(lifted)};
    }
}

bool unique_invariant_tensor_check(int m, unsigned long long seed, int samples) {
    if (m < 1 || m > 4) throw std::invalid_argument("unique_invariant_tensor_check: m out of range");
    int n = m * m * m;
    auto flat = [m](int p, int q, int r) { return (p * m + q) * m + r; };

    std::vector<std::vector<Rational>> rows;
    // Diagonal S_m acting simultaneously on all three factors, generators only.
    std::vector<Perm> gens;
    if (m >= 2) gens.push_back(Perm::transposition(m, 1, 2));
    if (m >= 3) gens.push_back(Perm::cyclic_shift(m, 1));
    for (const Perm& g : gens)
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
                for (int r = 0; r < m; ++r) {
                    std::vector<Rational> row(n);
                    row[flat(g.apply(p), g.apply(q), g.apply(r))] += 1;
                    row[flat(p, q, r)] -= 1;
                    if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
                        rows.push_back(std::move(row));
                }

    // Rational torus elements (a, b, c) with a_i b_i c_i = 1 kill every
    // coordinate whose scaling factor differs from 1.
    Rng rng(derive_seed(seed, 0x746f7275));
    for (int s = 0; s < samples; ++s) {
        std::vector<Rational> a(m), b(m), c(m);
        for (int i = 0; i < m; ++i) {
            a[i] = Rational(rng.between(1, 7), rng.between(1, 7));
            b[i] = Rational(rng.between(1, 7), rng.between(1, 7));
            c[i] = 1 / (a[i] * b[i]);
        }
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
                for (int r = 0; r < m; ++r) {
                    Rational f = a[p] * b[q] * c[r];
                    if (f == 1) continue;
                    std::vector<Rational> row(n);
                    row[flat(p, q, r)] = f - 1;
                    rows.push_back(std::move(row));
                }
    }

    RatMat sys((int)rows.size(), n);
    for (int r = 0; r < sys.rows; ++r)
        for (int c = 0; c < n; ++c) sys.at(r, c) = rows[r][c];
    std::vector<int> pivots = rref(sys);
    int nullity = n - (int)pivots.size();
    if (nullity != 1) return false;

    // Solve for the one free coordinate and confirm the solution is supported
    // exactly on the diagonal with equal entries.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_col = c;
    std::vector<Rational> w(n);
    w[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
        w[pivots[r]] = -sys.at((int)r, free_col);
    Rational diag = w[flat(0, 0, 0)];
    if (diag == 0) return false;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r) {
                bool on_diag = p == q && q == r;
                if (w[flat(p, q, r)] != (on_diag ? diag : Rational(0))) return false;
            }
    return true;
}

}
