// Acceptance gate: ten checks, one line each, nonzero exit on any failure.
// Each check carries a wall-clock budget that is part of the pass condition.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gct/hwv.hpp"
#include "gct/kronecker.hpp"
#include "gct/obstructions.hpp"
#include "gct/partition.hpp"
#include "gct/permutation.hpp"
#include "gct/polytopes.hpp"
#include "gct/rng.hpp"
#include "gct/stabilizer_invariants.hpp"
#include "gct/symgroup.hpp"
#include "gct/tableaux.hpp"
#include "gct/tensors.hpp"

using namespace gct;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "budget " + std::to_string(budget_seconds) + " s exceeded";
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %d: %s%s%s (%.2f s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : ": ", detail.c_str(), elapsed);
    std::fflush(stdout);
}

Perm cycle_rep(const Partition& rho) {
    std::vector<int> img(rho.size());
    int start = 0;
    for (int r = 0; r < rho.len(); ++r) {
        int len = rho[r];
        for (int j = 0; j < len; ++j) img[static_cast<size_t>(start + j)] = start + (j + 1) % len;
        start += len;
    }
    return Perm(img);
}

}  // namespace

int main() {
    const WeightTriple rank_weight = matmul_obstruction_weight(2);

    criterion(1, "pinned Kronecker coefficients", 15.0, [](std::string& detail) {
        struct Want {
            Partition a, b, c;
            BigInt exact;   // negative means "at least one"
        };
        std::vector<Want> wants = {
            {Partition({2, 2, 2, 2}), Partition({4, 4}), Partition({4, 4}), 1},
            {Partition({5, 1, 1, 1}), Partition({4, 4}), Partition({4, 4}), -1},
            {Partition({3, 3, 3, 3}), Partition({3, 3, 3, 3}), Partition({4, 4, 4}), 2},
        };
        for (const auto& w : wants) {
            auto one = std::chrono::steady_clock::now();
            BigInt g = kronecker(w.a, w.b, w.c);
            double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - one).count();
            if (t > 5.0) {
                detail = "a single coefficient took " + std::to_string(t) + " s";
                return false;
            }
            if (w.exact < 0 ? g < 1 : g != w.exact) {
                detail = "g = " + to_decimal(g);
                return false;
            }
        }
        detail = "g(2^4,(4,4),(4,4)) = 1, g((5,1,1,1),(4,4),(4,4)) >= 1, g(3^4,3^4,4^3) = 2";
        return true;
    });

    criterion(2, "exclusion half at five slots", 10.0, [&](std::string& detail) {
        auto breakdown = unit_invariant_dim_breakdown(rank_weight, 5);
        if (breakdown.total != 0) {
            detail = "total = " + to_decimal(breakdown.total);
            return false;
        }
        std::vector<Partition> visited;
        for (const auto& [alpha, dim] : breakdown.terms) {
            visited.push_back(alpha);
            if (dim != 0) {
                detail = "nonzero term at " + format_partition(alpha);
                return false;
            }
        }
        std::vector<Partition> expected = {Partition({2, 2, 2, 2}), Partition({2, 2, 2, 1, 1})};
        if (visited != expected) {
            detail = "visited " + std::to_string(visited.size()) + " weights";
            return false;
        }
        detail = "dimension 0; alpha sum visited exactly {2^4, 2^3 1^2}";
        return true;
    });

    criterion(3, "membership half and the border rank conclusion", 900.0, [&](std::string& detail) {
        auto strassen = strassen_decomposition();
        ObstructionReport report = run_obstruction(rank_weight, strassen, 5, 10000, 42,
                                                   CertifyOptions{8, true, 2}, "⟨2,2,2⟩");
        if (!report.membership) {
            detail = "no nonzero evaluation within 10^4 trials";
            return false;
        }
        const EvalCertificate& cert = *report.membership;
        RankOneDecomposition at = cert.g ? apply_group(*cert.g, strassen) : strassen;
        if (evaluate(cert.weight, cert.perms, at, 8) != cert.value || cert.value == 0) {
            detail = "certificate failed revalidation";
            return false;
        }
        if (!report.conclusion || *report.conclusion != "R̲(⟨2,2,2⟩) > 5") {
            detail = "missing conclusion";
            return false;
        }
        detail = "trial " + std::to_string(cert.trial) + ", value " + to_decimal(cert.value) +
                 ", conclusion " + *report.conclusion;
        return true;
    });

    criterion(4, "oracle equivalence for Kronecker and invariant dimensions", 120.0,
              [](std::string& detail) {
        long long checks = 0;
        for (int d = 1; d <= 5; ++d) {
            auto parts = enumerate_partitions(d, d);
            for (const auto& a : parts)
                for (const auto& b : parts)
                    for (const auto& c : parts) {
                        if (kronecker(a, b, c) != kronecker_bruteforce(a, b, c)) {
                            detail = "kronecker mismatch at d = " + std::to_string(d);
                            return false;
                        }
                        ++checks;
                    }
        }
        for (int m = 1; m <= 3; ++m)
            for (int d = 1; d <= 5; ++d) {
                auto parts = enumerate_partitions(d, m);
                for (const auto& a : parts)
                    for (const auto& b : parts)
                        for (const auto& c : parts) {
                            WeightTriple t = make_weight_triple(a, b, c, {m, m, m});
                            if (unit_invariant_dim(t, m) != unit_invariant_dim_bruteforce(t, m)) {
                                detail = "invariant dimension mismatch at m = " + std::to_string(m);
                                return false;
                            }
                            ++checks;
                        }
            }
        detail = std::to_string(checks) + " triples agree";
        return true;
    });

    criterion(5, "staircase is the dominance-least regular weight", 30.0, [](std::string& detail) {
        long long regulars = 0;
        for (int m = 1; m <= 5; ++m)
            for (int d = 1; d <= 12; ++d) {
                std::vector<Partition> regular;
                for (const auto& p : enumerate_partitions(d, m))
                    if (is_regular(p, m)) regular.push_back(p);
                if (regular.empty()) {
                    if (d >= m * (m - 1) / 2) {
                        detail = "no regular weight at m = " + std::to_string(m) +
                                 ", d = " + std::to_string(d);
                        return false;
                    }
                    continue;
                }
                Partition least = staircase(m, d);
                if (!is_regular(least, m)) {
                    detail = "staircase not regular at m = " + std::to_string(m) +
                             ", d = " + std::to_string(d);
                    return false;
                }
                for (const auto& p : regular) {
                    ++regulars;
                    if (!dominance_leq(least, p)) {
                        detail = format_partition(least) + " does not precede " + format_partition(p);
                        return false;
                    }
                }
            }
        detail = std::to_string(regulars) + " regular weights dominated";
        return true;
    });

    criterion(6, "barrier lift lands every small triple in the larger orbit support", 300.0,
              [](std::string& detail) {
        const int m = 3;
        const int bound = m * (m + 1) / 2 + m + 1;
        long long lifted = 0;
        for (int d = 1; d <= 6; ++d) {
            auto parts = enumerate_partitions(d, m);
            for (const auto& a : parts)
                for (const auto& b : parts)
                    for (const auto& c : parts) {
                        WeightTriple t = make_weight_triple(a, b, c, {m, m, m});
                        BarrierLift lift = barrier_lift(t, m);
                        if (lift.k > bound) {
                            detail = "k = " + std::to_string(lift.k) + " exceeds " +
                                     std::to_string(bound);
                            return false;
                        }
                        if (!in_So_unit(lift.lifted, m + 1)) {
                            detail = "lifted triple rejected at d = " + std::to_string(d);
                            return false;
                        }
                        ++lifted;
                    }
        }
        detail = std::to_string(lifted) + " triples lifted within k <= " + std::to_string(bound);
        return true;
    });

    criterion(7, "tableau and character identities", 120.0, [](std::string& detail) {
        for (int d = 1; d <= 8; ++d) {
            auto parts = enumerate_partitions(d, d);
            for (const auto& lambda : parts)
                for (const auto& mu : parts)
                    if ((weight_space_dim(lambda, mu.parts()) > 0) != dominance_leq(mu, lambda)) {
                        detail = "Kostka/dominance mismatch at d = " + std::to_string(d);
                        return false;
                    }
        }
        for (int m = 1; m <= 5; ++m)
            for (int d = 1; d <= 3; ++d)
                for (int s = 0; s < m; ++s) {
                    std::vector<int> rows = {d * m - s};
                    for (int i = 0; i < s; ++i) rows.push_back(1);
                    std::vector<int> alpha(static_cast<size_t>(m), d);
                    if (weight_space_dim(Partition(rows), alpha) != binomial(m - 1, s)) {
                        detail = "hook dimension mismatch at m = " + std::to_string(m);
                        return false;
                    }
                }
        for (int m = 3; m <= 5; ++m) {
            Partition lambda(std::vector<int>(static_cast<size_t>(m), 2));
            std::vector<int> alpha(static_cast<size_t>(m - 1), 2);
            alpha.push_back(1);
            alpha.push_back(1);
            for (int i = 0; i + 1 <= m; ++i) {
                if (i + 1 < m - 1 || i + 1 == m) {
                    std::vector<int> img(static_cast<size_t>(m + 1));
                    for (int j = 0; j <= m; ++j) img[static_cast<size_t>(j)] = j;
                    std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(i + 1)]);
                    IntMat mat = perm_action_matrix(Perm(img), lambda, alpha);
                    if (mat.rows != 1 || mat.at(0, 0) != 1) {
                        detail = "nontrivial action at m = " + std::to_string(m);
                        return false;
                    }
                }
            }
        }
        for (int d = 1; d <= 8; ++d) {
            const CharacterTable& table = CharacterTable::get(d);
            const auto& labels = table.labels();
            BigInt dfact = factorial(d);
            for (size_t i = 0; i < labels.size(); ++i)
                for (size_t j = i; j < labels.size(); ++j) {
                    BigInt acc = 0;
                    for (size_t c = 0; c < labels.size(); ++c)
                        acc += table.class_sizes()[c] * table.entry(static_cast<int>(i), static_cast<int>(c)) *
                               table.entry(static_cast<int>(j), static_cast<int>(c));
                    if (acc != (i == j ? dfact : BigInt(0))) {
                        detail = "orthogonality failure at d = " + std::to_string(d);
                        return false;
                    }
                }
        }
        for (int d = 1; d <= 6; ++d) {
            auto parts = enumerate_partitions(d, d);
            for (const auto& a : parts)
                for (const auto& b : parts)
                    for (const auto& c : parts)
                        if (kronecker(a, b, c) != kronecker(transpose(a), transpose(b), c)) {
                            detail = "transpose symmetry failure at d = " + std::to_string(d);
                            return false;
                        }
        }
        detail = "dominance, hook dimensions, rectangle triviality, orthogonality, transpose symmetry";
        return true;
    });

    criterion(8, "evaluation is independent of the decomposition", 60.0, [](std::string& detail) {
        auto naive = matmul_tensor(MatmulFormat{2, 2, 2});
        auto strassen = strassen_decomposition();
        if (dense_expand(naive) != dense_expand(strassen)) {
            detail = "dense expansions differ";
            return false;
        }
        long long agreements = 0;
        for (int d = 1; d <= 4; ++d) {
            auto parts = enumerate_partitions(d, 4);
            int index = 0;
            for (const auto& a : parts)
                for (const auto& b : parts)
                    for (const auto& c : parts) {
                        WeightTriple t = make_weight_triple(a, b, c, {4, 4, 4});
                        for (int trial = 0; trial < 20; ++trial) {
                            Rng rng(derive_seed(112233, (unsigned long long)(d * 1000000 + index * 100 + trial)));
                            PermTriple perms{random_perm(rng, d), random_perm(rng, d), random_perm(rng, d)};
                            if (evaluate(t, perms, naive) != evaluate(t, perms, strassen)) {
                                detail = "mismatch at degree " + std::to_string(d);
                                return false;
                            }
                            ++agreements;
                        }
                        ++index;
                    }
        }
        detail = std::to_string(agreements) + " paired evaluations agree";
        return true;
    });

    criterion(9, "matmul-side membership of the rank weight", 30.0, [&](std::string& detail) {
        Partition mu({4, 4});
        BigInt term = kronecker(rank_weight.lambda1, mu, mu) * kronecker(rank_weight.lambda2, mu, mu) *
                      kronecker(rank_weight.lambda3, mu, mu);
        BigInt total = matmul_invariant_dim(rank_weight.lambda1, rank_weight.lambda2,
                                            rank_weight.lambda3, MatmulFormat{2, 2, 2});
        if (term < 1) {
            detail = "mu = (4,4) term vanishes";
            return false;
        }
        if (total < 1 || total < term) {
            detail = "total = " + to_decimal(total);
            return false;
        }
        detail = "dimension " + to_decimal(total) + " with mu = (4,4) contributing " + to_decimal(term);
        return true;
    });

    criterion(10, "polytope certificates", 300.0, [](std::string& detail) {
        auto uniform = verify_uniform_membership(2, 8);
        if (!uniform || uniform->ell != 2) {
            detail = "uniform membership search failed";
            return false;
        }
        const EvalCertificate& cert = uniform->certificate;
        RankOneDecomposition at = cert.g ? apply_group(*cert.g, unit_tensor(2)) : unit_tensor(2);
        if (cert.value == 0 || evaluate(cert.weight, cert.perms, at) != cert.value) {
            detail = "uniform certificate failed revalidation";
            return false;
        }
        if (!verify_unit_polytope_density(3, 8, 4, 1)) {
            detail = "density check failed";
            return false;
        }
        GeneratorSet gens = kronecker_generators({2, 2, 2}, 4);
        std::vector<RationalPoint> probes;
        probes.push_back(uniform_point({2, 2, 2}));
        for (const auto& gp : gens.points) probes.push_back(gp.point);
        for (const auto& p : probes) {
            auto witness = hull_membership(p, gens);
            if (!witness || !validate_witness(p, gens, *witness)) {
                detail = "hull witness failed revalidation";
                return false;
            }
        }
        detail = "ell = 2 certified; density holds; " + std::to_string(probes.size()) +
                 " hull witnesses revalidated";
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
