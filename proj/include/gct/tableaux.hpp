#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gct/bigint.hpp"
#include "gct/matrix.hpp"
#include "gct/partition.hpp"
#include "gct/permutation.hpp"

namespace gct {

// Filling of a Young diagram with entries in {1..m}; not necessarily
// semistandard. Row i has shape[i] cells.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool operator==(const Tableau&) const = default;
    std::strong_ordering operator<=>(const Tableau&) const = default;

    int at(int row, int col) const { return rows[static_cast<size_t>(row)][static_cast<size_t>(col)]; }
    int& at(int row, int col) { return rows[static_cast<size_t>(row)][static_cast<size_t>(col)]; }
};

Tableau make_tableau(const Partition& shape, std::vector<std::vector<int>> rows);

// T_lambda: row i filled with the entry i.
Tableau canonical_tableau(const Partition& shape);

bool is_semistandard(const Tableau& t);

// Entry multiplicity vector over {1..m}.
std::vector<int> content(const Tableau& t, int m);

// Entries replaced by their sigma-images (sigma acts on values, 1-based).
Tableau relabel(const Tableau& t, const Perm& sigma);

// All semistandard tableaux of the given shape and content, in row-reading
// lexicographic order; the count is the Kostka number.
std::vector<Tableau> enumerate_semistandard(const Partition& shape, const std::vector<int>& content);

long long weight_space_dim(const Partition& lambda, const std::vector<int>& alpha);

// Integer expansion of v(T) over the semistandard basis vectors of the same
// shape and content.
struct StraightExpansion {
    std::map<Tableau, BigInt> terms;
};

StraightExpansion straighten(const Tableau& t);
// Identical result, no memo table; used to validate the cache.
StraightExpansion straighten_uncached(const Tableau& t);

// Matrix of sigma on the semistandard basis of V_lambda^alpha (column T holds
// the expansion of v(sigma T)). Requires sigma in stab(alpha):
// alpha[sigma(i)] = alpha[i] for all slots i.
IntMat perm_action_matrix(const Perm& sigma, const Partition& lambda, const std::vector<int>& alpha);

// Human-oriented one-line form "1,1;2" (rows joined by ';').
std::string format_tableau_rows(const Tableau& t);
std::vector<std::vector<int>> parse_tableau_rows(const std::string& text);

}
