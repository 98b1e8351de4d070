#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gct/bigint.hpp"
#include "gct/kronecker.hpp"
#include "gct/partition.hpp"

namespace gct {

// Product of symmetric groups on the equal-value blocks of a weight read in m
// slots; the zero block counts.
struct YoungSubgroup {
    std::vector<int> block_sizes;
    BigInt order;
};

YoungSubgroup young_subgroup(const Partition& alpha, int slots);

struct MatmulFormat {
    int n1 = 1, n2 = 1, n3 = 1;
};

// dim of the stab(alpha)-invariants of V_{l1}^alpha (x) V_{l2}^alpha (x) V_{l3}^alpha,
// by class averaging over the Young subgroup. alpha must be dominated by the
// meet of the three partitions; the final division is asserted exact.
BigInt stab_alpha_invariant_dim(const WeightTriple& triple, const Partition& alpha, int m);

// Sum of stab_alpha_invariant_dim over all alpha in Par_m(d) dominated by the
// meet of the three partitions.
BigInt unit_invariant_dim(const WeightTriple& triple, int m);

struct UnitInvariantBreakdown {
    BigInt total;
    std::vector<std::pair<Partition, BigInt>> terms;  // one entry per visited alpha
};

UnitInvariantBreakdown unit_invariant_dim_breakdown(const WeightTriple& triple, int m);

// Independent oracle: average the full diagonal S_m over the direct sum of
// all matching-weight spaces (compositions, not sorted weights). m <= 4, d <= 6.
BigInt unit_invariant_dim_bruteforce(const WeightTriple& triple, int m);

// Triple sum of Kronecker coefficient products over mu_i |-_{n_i} d.
BigInt matmul_invariant_dim(const Partition& l12, const Partition& l23, const Partition& l31,
                            const MatmulFormat& fmt);

// Whether the triple occurs in the coordinate ring of the unit-tensor orbit:
// a regular dominated weight certifies this outright, otherwise the full
// invariant dimension decides.
bool in_So_unit(const WeightTriple& triple, int m);

// The staircase, when it is regular in m slots and dominated by the meet.
// Minimality of the staircase among regular weights makes this complete.
std::optional<Partition> regular_witness(const WeightTriple& triple, int m);

struct BarrierLift {
    int k = 0;
    WeightTriple lifted;  // m+1 slot triple (l_i^1 + k, ..., l_i^m + k, 0)
};

// Smallest k for which the shifted-and-padded triple acquires a regular
// witness in m+1 slots. Bounded by m(m+1)/2 + m + 1.
BarrierLift barrier_lift(const WeightTriple& triple, int m);

// True iff the space of tensors in (Q^m)^{x3} fixed by all diagonal S_m
// permutation triples and by sampled rational torus elements (a,b,c with
// a_i b_i c_i = 1) is one-dimensional, spanned by the unit tensor. Sound:
// the cut-out space always contains the truly invariant one.
bool unique_invariant_tensor_check(int m, unsigned long long seed = 1, int samples = 6);

}
