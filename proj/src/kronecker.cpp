#include "gct/kronecker.hpp"

#include <stdexcept>

#include "gct/error.hpp"
#include "gct/matrix.hpp"
#include "gct/permutation.hpp"
#include "gct/symgroup.hpp"
#include "gct/tableaux.hpp"

namespace gct {

WeightTriple make_weight_triple(Partition l1, Partition l2, Partition l3, std::array<int, 3> format) {
    if (l1.size() != l2.size() || l2.size() != l3.size())
        throw std::invalid_argument("weight triple: sizes differ");
    const Partition* ls[3] = {&l1, &l2, &l3};
    for (int i = 0; i < 3; ++i) {
        if (format[i] <= 0) throw std::invalid_argument("weight triple: format must be positive");
        if (ls[i]->len() > format[i])
            throw std::invalid_argument("weight triple: partition exceeds format slot");
    }
    WeightTriple t;
    t.degree = l1.size();
    t.lambda1 = std::move(l1);
    t.lambda2 = std::move(l2);
    t.lambda3 = std::move(l3);
    t.format = format;
    return t;
}

BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int d = lambda.size();
    if (mu.size() != d || nu.size() != d)
        throw std::invalid_argument("kronecker: sizes differ");
    if (d == 0) return 1;
    const CharacterTable& table = CharacterTable::get(d);
    BigInt sum = 0;
    int il = table.index_of(lambda), im = table.index_of(mu), in = table.index_of(nu);
    int classes = (int)table.labels().size();
    for (int c = 0; c < classes; ++c)
        sum += table.class_sizes()[c] * table.entry(il, c) * table.entry(im, c) * table.entry(in, c);
    BigInt order = factorial(d);
    if (sum % order != 0) throw defect_error("kronecker: character sum not divisible by d!");
    BigInt g = sum / order;
    if (g < 0) throw defect_error("kronecker: negative multiplicity");
    return g;
}

namespace {

// Matrix of sigma acting on the Specht-like model: the weight-(1^d) subspace
// of shape lambda, with the straightening basis.
IntMat rep_matrix(const Perm& sigma, const Partition& lambda) {
    std::vector<int> ones(lambda.size(), 1);
    return perm_action_matrix(sigma, lambda, ones);
}

}

BigInt kronecker_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int d = lambda.size();
    if (mu.size() != d || nu.size() != d)
        throw std::invalid_argument("kronecker_bruteforce: sizes differ");
    if (d > 5) throw std::invalid_argument("kronecker_bruteforce: degree above guard");
    if (d == 0) return 1;
    if (d == 1) return 1;

    std::vector<Perm> gens;
    gens.push_back(Perm::transposition(d, 1, 2));
    gens.push_back(Perm::cyclic_shift(d, 1));

    std::vector<IntMat> blocks;
    for (const Perm& g : gens) {
        IntMat a = rep_matrix(g, lambda);
        IntMat b = rep_matrix(g, mu);
        IntMat c = rep_matrix(g, nu);
        blocks.push_back(kron_product(kron_product(a, b), c));
    }
    int n = blocks[0].rows;
    IntMat stacked((int)blocks.size() * n, n);
    for (int k = 0; k < (int)blocks.size(); ++k)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                stacked.at(k * n + r, c) = blocks[k].at(r, c) - (r == c ? BigInt(1) : BigInt(0));
    return n - rank_int(stacked);
}

std::vector<WeightTriple> kronecker_semigroup_points(std::array<int, 3> format, int max_degree) {
    std::vector<WeightTriple> out;
    for (int d = 1; d <= max_degree; ++d) {
        auto p1 = enumerate_partitions(d, format[0]);
        auto p2 = enumerate_partitions(d, format[1]);
        auto p3 = enumerate_partitions(d, format[2]);
        for (const auto& a : p1)
            for (const auto& b : p2)
                for (const auto& c : p3)
                    if (kronecker(a, b, c) != 0)
                        out.push_back(make_weight_triple(a, b, c, format));
    }
    return out;
}

}
