#pragma once

#include <optional>
#include <string>

#include "gct/bigint.hpp"
#include "gct/kronecker.hpp"
#include "gct/permutation.hpp"
#include "gct/tensors.hpp"

namespace gct {

struct PermTriple {
    Perm p1, p2, p3;
    const Perm& perm(int i) const { return i == 0 ? p1 : (i == 1 ? p2 : p3); }
};

PermTriple identity_perm_triple(int d);

struct EvalCertificate {
    WeightTriple weight;
    PermTriple perms;
    std::optional<GroupElement> g;
    BigInt value;              // nonzero
    std::string tensor_digest; // of the decomposition the search was given
    long long trial = 0;
    unsigned long long seed = 0;
};

// Exact pairing of the permuted tableau vector with w^{(x)d}, up to a fixed
// positive rational factor depending only on the shapes: the sum over all
// maps from slots to decomposition terms of the product, over factors and
// tableau columns, of the top-coordinate determinants. Deterministic for any
// thread count.
BigInt evaluate(const WeightTriple& triple, const PermTriple& perms,
                const RankOneDecomposition& w, int threads = 1);

struct CertifyOptions {
    int threads = 1;
    bool random_g = true;
    int g_bound = 2;
};

// Tries the identity triple, then single-factor cyclic shifts, then seeded
// random triples, until an evaluation is nonzero. Random trials that miss at
// w itself retry at a seeded group translate g.w when random_g is set; this
// matters when the invariant vanishes at the given basis alignment of w, and
// it is sound because orbit closures are group-stable. First success by trial
// index wins. A miss after all trials is inconclusive, not a disproof.
std::optional<EvalCertificate> certify_in_S(const WeightTriple& triple, const RankOneDecomposition& w,
                                            long long trials, unsigned long long seed,
                                            const CertifyOptions& opts = {});

// Distinguishes the zero function from a zero value: evaluates at seeded
// random integer tensors of the given format. True is sound; false is
// inconclusive.
bool hwv_is_nonzero_function(const WeightTriple& triple, const PermTriple& perms,
                             const std::array<int, 3>& format, int trials, unsigned long long seed,
                             int threads = 1);

}
