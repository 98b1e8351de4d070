#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gct/partition.hpp"
#include "gct/rng.hpp"

namespace gct {

// Permutation of {1..n}, stored as the one-line image on 0-based points:
// img[i] = sigma(i), both 0-based. Text I/O uses 1-based cycle notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> img);
    static Perm identity(int n);
    static Perm transposition(int n, int a, int b);  // a, b 1-based
    static Perm cyclic_shift(int n, int s);          // i -> i + s (mod n)

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[static_cast<size_t>(i)]; }   // 0-based
    int apply1(int i) const { return img_[static_cast<size_t>(i - 1)] + 1; }  // 1-based

    Perm compose(const Perm& rhs) const;  // (*this) after rhs: i -> this(rhs(i))
    Perm inverse() const;
    int sign() const;
    bool is_identity() const;
    Partition cycle_type() const;

    bool operator==(const Perm&) const = default;
    std::strong_ordering operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

// "(1 2 3)(4 5)" with 1-based points; commas also accepted as separators;
// "()" or "id" is the identity. Unmentioned points are fixed.
Perm parse_cycles(const std::string& text, int n);
std::string format_cycles(const Perm& p);

Perm random_perm(Rng& rng, int n);

}
