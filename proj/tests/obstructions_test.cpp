#include "doctest.h"

#include <stdexcept>

#include "gct/obstructions.hpp"
#include "gct/tensors.hpp"

using namespace gct;

TEST_SUITE("obstructions") {

TEST_CASE("the rank bound weight for square matrix multiplication") {
    WeightTriple t2 = matmul_obstruction_weight(2);
    CHECK(t2.lambda1 == Partition({2, 2, 2, 2}));
    CHECK(t2.lambda2 == Partition({2, 2, 2, 2}));
    CHECK(t2.lambda3 == Partition({5, 1, 1, 1}));
    CHECK(t2.degree == 8);
    CHECK(t2.format == std::array<int, 3>{4, 4, 5});

    WeightTriple t3 = matmul_obstruction_weight(3);
    CHECK(t3.lambda1 == Partition(std::vector<int>(9, 2)));
    CHECK(t3.lambda3 == Partition({15, 1, 1, 1}));
    CHECK(t3.format == std::array<int, 3>{9, 9, 10});

    CHECK_THROWS_AS(matmul_obstruction_weight(1), std::invalid_argument);
}

TEST_CASE("conclusion text") {
    CHECK(conclusion_text("x", 3) == "R̲(x) > 3");
    CHECK(conclusion_text("⟨2,2,2⟩", 5) == "R̲(⟨2,2,2⟩) > 5");
}

TEST_CASE("the full run concludes the border rank bound") {
    ObstructionReport report = run_obstruction(matmul_obstruction_weight(2), strassen_decomposition(),
                                               5, 200, 42, CertifyOptions{2, true, 2}, "⟨2,2,2⟩");
    CHECK(report.target_m == 5);
    CHECK(report.not_in_So);
    CHECK(report.so_breakdown.total == 0);
    REQUIRE(report.so_breakdown.terms.size() == 2);
    CHECK(report.so_breakdown.terms[0].first == Partition({2, 2, 2, 2}));
    CHECK(report.so_breakdown.terms[1].first == Partition({2, 2, 2, 1, 1}));
    REQUIRE(report.membership.has_value());
    CHECK(report.membership->trial == 22);
    CHECK(report.membership->value == -35831808);
    REQUIRE(report.conclusion.has_value());
    CHECK(*report.conclusion == conclusion_text("⟨2,2,2⟩", 5));
    CHECK(*report.conclusion == "R̲(⟨2,2,2⟩) > 5");
}

TEST_CASE("a failed search never produces a conclusion") {
    // one trial: the identity evaluation vanishes at the straight presentation
    ObstructionReport report = run_obstruction(matmul_obstruction_weight(2), strassen_decomposition(),
                                               5, 1, 42);
    CHECK(report.not_in_So);
    CHECK(!report.membership.has_value());
    CHECK(!report.conclusion.has_value());
}

TEST_CASE("a weight inside the orbit support never produces a conclusion") {
    WeightTriple triple = make_weight_triple(Partition({2}), Partition({2}), Partition({2}),
                                             {4, 4, 5});
    ObstructionReport report = run_obstruction(triple, strassen_decomposition(), 5, 20, 7);
    CHECK(!report.not_in_So);
    CHECK(report.so_breakdown.total > 0);
    CHECK(report.membership.has_value());  // the search itself succeeds
    CHECK(!report.conclusion.has_value());
}

TEST_CASE("a zero multiplicity weight excludes but cannot certify") {
    WeightTriple triple = make_weight_triple(Partition({1, 1}), Partition({1, 1}),
                                             Partition({1, 1}), {4, 4, 5});
    ObstructionReport report = run_obstruction(triple, strassen_decomposition(), 5, 12, 9);
    CHECK(report.not_in_So);
    CHECK(!report.membership.has_value());
    CHECK(!report.conclusion.has_value());
}

TEST_CASE("weights with too many rows are excluded outright") {
    WeightTriple triple = make_weight_triple(Partition({1, 1, 1}), Partition({2, 1}),
                                             Partition({2, 1}), {4, 4, 5});
    ObstructionReport report = run_obstruction(triple, unit_tensor(4), 2, 6, 3);
    CHECK(report.not_in_So);
    CHECK(report.so_breakdown.terms.empty());
}

TEST_CASE("the degree three scan against the two by two diagonal") {
    auto hits = obstruction_search(unit_tensor(2), 1, 3, 20, 5);
    CHECK(!hits.empty());
    for (const auto& r : hits) {
        CHECK(r.not_in_So);
        REQUIRE(r.membership.has_value());
        CHECK(r.membership->value != 0);
        REQUIRE(r.conclusion.has_value());
        CHECK(*r.conclusion == conclusion_text("w", 1));
        // revalidate the certificate against an independent evaluation
        RankOneDecomposition at = r.membership->g ? apply_group(*r.membership->g, unit_tensor(2))
                                                  : unit_tensor(2);
        CHECK(evaluate(r.weight, r.membership->perms, at) == r.membership->value);
    }
    // the three cyclic placements of ((2,1),(2,1),(3)) and the all-(2,1) triple
    CHECK(hits.size() == 4);
}

TEST_CASE("membership consistency of the square format") {
    CHECK(square_membership_check(2));
}

}
