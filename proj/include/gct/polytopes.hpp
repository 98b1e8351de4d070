#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gct/bigint.hpp"
#include "gct/hwv.hpp"
#include "gct/kronecker.hpp"

namespace gct {

// A point of the product of three ordered simplices: each block weakly
// decreasing, nonnegative, summing to one.
struct RationalPoint {
    std::array<std::vector<Rational>, 3> blocks;
};

RationalPoint make_rational_point(std::array<std::vector<Rational>, 3> blocks);

// lambda_i / d, zero-padded to the format.
RationalPoint normalize(const WeightTriple& triple);

RationalPoint uniform_point(const std::array<int, 3>& format);

struct GeneratorPoint {
    RationalPoint point;
    WeightTriple source;
};

struct GeneratorSet {
    std::array<int, 3> format{0, 0, 0};
    std::vector<GeneratorPoint> points;
};

// Normalized points of all nonzero-Kronecker triples up to the degree bound.
GeneratorSet kronecker_generators(const std::array<int, 3>& format, int max_degree);

// Convex-combination coefficients, parallel to the generator list.
struct HullWitness {
    std::vector<Rational> coefficients;
};

// Exact feasibility: is p a convex combination of the generators? Solved by
// a rational phase-one simplex with Bland's rule; a returned witness always
// revalidates.
std::optional<HullWitness> hull_membership(const RationalPoint& p, const GeneratorSet& gens);

bool validate_witness(const RationalPoint& p, const GeneratorSet& gens, const HullWitness& witness);

// Desk-scale support for the statement that the unit-tensor orbit polytope
// fills the whole simplex product: (a) every all-regular triple of degree at
// most max_degree is accepted by in_So_unit; (b) sampled points of the
// simplex product are approximable in the infinity norm, within 1/max_degree,
// by normalized all-regular triples of degree at most m * max_degree.
bool verify_unit_polytope_density(int m, int max_degree, int samples, unsigned long long seed);

struct UniformMembership {
    int ell = 0;
    EvalCertificate certificate;
};

// Finds ell with g((ell^m) x3) > 0 and a nonzero evaluation on the unit
// tensor, witnessing that the uniform point lies in the unit-tensor polytope.
std::optional<UniformMembership> verify_uniform_membership(int m, int max_degree,
                                                           long long trials = 512,
                                                           unsigned long long seed = 1);

}
