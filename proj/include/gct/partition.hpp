#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gct {

// Integer partition: weakly decreasing positive parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    // Accepts parts in any order with zeros; canonicalizes by sorting descending
    // and stripping zeros. Negative parts are rejected.
    explicit Partition(std::vector<int> parts);

    // Number of boxes |lambda|.
    int size() const { return size_; }
    // Number of nonzero parts.
    int len() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based; reads as an infinite vector padded with zeros.
    int operator[](int i) const {
        return (i >= 0 && i < len()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Partition read as an m-component vector with explicit trailing zeros;
// regularity and other slot-sensitive notions depend on m.
struct BoundedPartitionView {
    const Partition& partition;
    int slots;
};

// alpha dominated by lambda: equal sizes and every prefix sum of alpha is <= that
// of lambda. False (not an error) on size mismatch.
bool dominance_leq(const Partition& alpha, const Partition& lambda);

// Greatest lower bound in dominance order, via consecutive differences of the
// pointwise minimum of the prefix-sum vectors (prefix sums of partitions are
// concave, so the minimum is again concave and nonnegative-differenced).
Partition meet(const Partition& a, const Partition& b);

Partition transpose(const Partition& p);

// Pairwise distinct components including explicit zeros; at most one zero slot.
bool is_regular(BoundedPartitionView v);
inline bool is_regular(const Partition& p, int slots) { return is_regular({p, slots}); }

// d = q*m + r with 0 <= r < m gives (q+1)^r q^(m-r), the dominance-smallest
// element of Par_m(d).
Partition box_partition(int m, int d);

// s(l) + box_l(d - l(l+1)/2) with l = max{n <= m : n(n+1)/2 <= d}; the
// dominance-smallest regular element of Par_m(d) whenever one exists.
// Requires d >= 1 (l is undefined at d = 0).
Partition staircase(int m, int d);

// All partitions of d into at most max_parts parts, lexicographically descending.
std::vector<Partition> enumerate_partitions(int d, int max_parts);

// All alpha in Par_slots(|bound|) with alpha dominated by bound, in
// enumerate_partitions order.
std::vector<Partition> enumerate_dominated(const Partition& bound, int slots);

// Componentwise sum (no common-size requirement).
Partition partition_add(const Partition& a, const Partition& b);

// Accepts a comma list "5,1,1,1" or frequency notation "2^4" / "5 1^3"
// (space-separated terms). "()" and "" denote the empty partition.
Partition parse_partition(const std::string& text);

// Canonical comma list; "()" for the empty partition.
std::string format_partition(const Partition& p);

std::vector<int> padded(const Partition& p, int slots);

}
