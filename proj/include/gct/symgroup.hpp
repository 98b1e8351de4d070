#pragma once

#include <map>
#include <vector>

#include "gct/bigint.hpp"
#include "gct/partition.hpp"

namespace gct {

// Cycle type of a conjugacy class of S_d.
using CycleType = Partition;

// |C_rho| = d! / prod_k (k^{a_k} a_k!), a_k = multiplicity of k in rho.
BigInt class_size(const CycleType& rho);

// chi_lambda(rho) by the border-strip recursion. Requires |lambda| = |rho|.
BigInt character(const Partition& lambda, const CycleType& rho);

// chi_lambda(1^d); cross-checked against the hook-length formula in tests.
BigInt irrep_dimension(const Partition& lambda);

// d!/prod(hooks); independent dimension oracle.
BigInt hook_length_dimension(const Partition& lambda);

// All irreducible characters of S_d, built eagerly, immutable afterwards.
// Irreps and classes are both indexed by enumerate_partitions(d, d) order.
class CharacterTable {
public:
    static const CharacterTable& get(int degree);  // process-wide cache

    int degree() const { return degree_; }
    const std::vector<Partition>& labels() const { return labels_; }
    const std::vector<BigInt>& class_sizes() const { return class_sizes_; }
    int index_of(const Partition& p) const;
    const BigInt& entry(int irrep, int cls) const {
        return entries_[static_cast<size_t>(irrep) * labels_.size() + static_cast<size_t>(cls)];
    }
    const BigInt& entry(const Partition& irrep, const Partition& cls) const {
        return entry(index_of(irrep), index_of(cls));
    }

private:
    explicit CharacterTable(int degree);

    int degree_;
    std::vector<Partition> labels_;
    std::vector<BigInt> class_sizes_;
    std::vector<BigInt> entries_;
    std::map<Partition, int> index_;
};

}
