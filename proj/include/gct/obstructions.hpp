#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gct/hwv.hpp"
#include "gct/stabilizer_invariants.hpp"

namespace gct {

// Outcome of one obstruction run against the unit tensor of size m: the
// conclusion is only present when the exact dimension is zero AND a nonzero
// evaluation certificate exists.
struct ObstructionReport {
    WeightTriple weight;
    int target_m = 0;
    bool not_in_So = false;
    UnitInvariantBreakdown so_breakdown;
    std::optional<EvalCertificate> membership;
    std::optional<std::string> conclusion;  // "borderrank(w) > m"
};

// The degree-2n^2 triple ((2^(n^2)), (2^(n^2)), (2n^2-3,1,1,1)) that
// obstructs border rank n^2+1 for the n x n matrix multiplication tensor.
WeightTriple matmul_obstruction_weight(int n);

// Runs both halves and assembles the report; never concludes from a failed
// search.
ObstructionReport run_obstruction(const WeightTriple& triple, const RankOneDecomposition& w, int m,
                                  long long trials, unsigned long long seed,
                                  const CertifyOptions& opts = {}, const std::string& tensor_name = "w");

// The matmul-side membership consistency check at small n: the invariant
// dimension of the triple against format (n,n,n) is at least the positive
// product contributed by mu_i = ((2n)^n).
bool square_membership_check(int n);

// Exploratory scan: all weight triples of the given degree against w, with
// the S-omitted side tested at m; returns triples that obstruct.
std::vector<ObstructionReport> obstruction_search(const RankOneDecomposition& w, int m, int degree,
                                                  long long trials, unsigned long long seed,
                                                  const CertifyOptions& opts = {});

std::string conclusion_text(const std::string& tensor_name, int m);

}
