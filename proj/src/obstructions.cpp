#include "gct/obstructions.hpp"

#include <stdexcept>

namespace gct {

WeightTriple matmul_obstruction_weight(int n) {
    if (n < 2) throw std::invalid_argument("matmul_obstruction_weight: n must be at least 2");
    int nn = n * n;
    std::vector<int> twos(nn, 2);
    std::vector<int> third = {2 * nn - 3, 1, 1, 1};
    return make_weight_triple(Partition(twos), Partition(twos), Partition(third),
                              {nn, nn, nn + 1});
}

std::string conclusion_text(const std::string& tensor_name, int m) {
    return "R̲(" + tensor_name + ") > " + std::to_string(m);
}

ObstructionReport run_obstruction(const WeightTriple& triple, const RankOneDecomposition& w, int m,
                                  long long trials, unsigned long long seed,
                                  const CertifyOptions& opts, const std::string& tensor_name) {
    ObstructionReport report;
    report.weight = triple;
    report.target_m = m;
    bool fits = triple.lambda1.len() <= m && triple.lambda2.len() <= m && triple.lambda3.len() <= m;
    if (fits) {
        report.so_breakdown = unit_invariant_dim_breakdown(triple, m);
        report.not_in_So = report.so_breakdown.total == 0;
    } else {
        // A weight with more rows than m cannot occur for a tensor living in
        // m-dimensional factors, so the exclusion half holds outright.
        report.so_breakdown.total = 0;
        report.not_in_So = true;
    }
    report.membership = certify_in_S(triple, w, trials, seed, opts);
    if (report.not_in_So && report.membership)
        report.conclusion = conclusion_text(tensor_name, m);
    return report;
}

bool square_membership_check(int n) {
    WeightTriple triple = matmul_obstruction_weight(n);
    std::vector<int> mu_parts(n, 2 * n);
    Partition mu(mu_parts);
    BigInt g1 = kronecker(triple.lambda1, mu, mu);
    BigInt g2 = kronecker(triple.lambda2, mu, mu);
    BigInt g3 = kronecker(triple.lambda3, mu, mu);
    if (g1 * g2 * g3 == 0) return false;
    BigInt total = matmul_invariant_dim(triple.lambda1, triple.lambda2, triple.lambda3,
                                        MatmulFormat{n, n, n});
    return total >= g1 * g2 * g3;
}

std::vector<ObstructionReport> obstruction_search(const RankOneDecomposition& w, int m, int degree,
                                                  long long trials, unsigned long long seed,
                                                  const CertifyOptions& opts) {
    std::vector<ObstructionReport> hits;
    auto p1 = enumerate_partitions(degree, w.format[0]);
    auto p2 = enumerate_partitions(degree, w.format[1]);
    auto p3 = enumerate_partitions(degree, w.format[2]);
    for (const auto& a : p1)
        for (const auto& b : p2)
            for (const auto& c : p3) {
                ObstructionReport report = run_obstruction(
                    make_weight_triple(a, b, c, w.format), w, m, trials, seed, opts);
                if (report.conclusion) hits.push_back(std::move(report));
            }
    return hits;
}

}
