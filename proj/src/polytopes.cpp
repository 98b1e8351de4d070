#include "gct/polytopes.hpp"

#include <algorithm>
#include <stdexcept>

#include "gct/error.hpp"
#include "gct/matrix.hpp"
#include "gct/partition.hpp"
#include "gct/rng.hpp"
#include "gct/stabilizer_invariants.hpp"
#include "gct/tensors.hpp"

namespace gct {

RationalPoint make_rational_point(std::array<std::vector<Rational>, 3> blocks) {
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("rational point: empty block");
        Rational sum = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0) throw std::invalid_argument("rational point: negative entry");
            if (i + 1 < b.size() && b[i] < b[i + 1])
                throw std::invalid_argument("rational point: block not weakly decreasing");
            sum += b[i];
        }
        if (sum != 1) throw std::invalid_argument("rational point: block does not sum to one");
    }
    return RationalPoint{std::move(blocks)};
}

RationalPoint normalize(const WeightTriple& triple) {
    if (triple.degree < 1) throw std::invalid_argument("normalize: degree must be positive");
    std::array<std::vector<Rational>, 3> blocks;
    for (int i = 0; i < 3; ++i) {
        std::vector<int> parts = padded(triple.lambda(i), triple.format[(size_t)i]);
        for (int p : parts) blocks[(size_t)i].emplace_back(p, triple.degree);
    }
    return make_rational_point(std::move(blocks));
}

RationalPoint uniform_point(const std::array<int, 3>& format) {
    std::array<std::vector<Rational>, 3> blocks;
    for (int i = 0; i < 3; ++i) {
        if (format[(size_t)i] < 1) throw std::invalid_argument("uniform_point: format must be positive");
        blocks[(size_t)i].assign((size_t)format[(size_t)i], Rational(1, format[(size_t)i]));
    }
    return make_rational_point(std::move(blocks));
}

GeneratorSet kronecker_generators(const std::array<int, 3>& format, int max_degree) {
    GeneratorSet gens;
    gens.format = format;
    for (const WeightTriple& t : kronecker_semigroup_points(format, max_degree))
        gens.points.push_back({normalize(t), t});
    return gens;
}

namespace {

std::vector<Rational> flatten(const RationalPoint& p) {
    std::vector<Rational> out;
    for (const auto& b : p.blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Phase-one simplex, exact rationals, Bland's rule. Feasibility of
// A y = b, y >= 0; returns y on success.
std::optional<std::vector<Rational>> lp_feasible(RatMat a, std::vector<Rational> b) {
    int rows = a.rows, nv = a.cols;
    for (int i = 0; i < rows; ++i)
        if (b[(size_t)i] < 0) {
            for (int j = 0; j < nv; ++j) a.at(i, j) = -a.at(i, j);
            b[(size_t)i] = -b[(size_t)i];
        }
    int total = nv + rows;  // artificials appended
    RatMat t(rows, total);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < nv; ++j) t.at(i, j) = a.at(i, j);
        t.at(i, nv + i) = 1;
    }
    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i) basis[(size_t)i] = nv + i;

    while (true) {
        // reduced cost of column j for min(sum of artificials)
        int enter = -1;
        for (int j = 0; j < total && enter < 0; ++j) {
            if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
            Rational d = j >= nv ? Rational(1) : Rational(0);
            for (int i = 0; i < rows; ++i)
                if (basis[(size_t)i] >= nv) d -= t.at(i, j);
            if (d < 0) enter = j;
        }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < rows; ++i) {
            if (t.at(i, enter) <= 0) continue;
            Rational ratio = b[(size_t)i] / t.at(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[(size_t)i] < basis[(size_t)leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw defect_error("phase-one objective cannot be unbounded");
        Rational piv = t.at(leave, enter);
        for (int j = 0; j < total; ++j) t.at(leave, j) /= piv;
        b[(size_t)leave] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == leave) continue;
            Rational f = t.at(i, enter);
            if (f == 0) continue;
            for (int j = 0; j < total; ++j) t.at(i, j) -= f * t.at(leave, j);
            b[(size_t)i] -= f * b[(size_t)leave];
        }
        basis[(size_t)leave] = enter;
    }

    Rational objective = 0;
    for (int i = 0; i < rows; ++i)
        if (basis[(size_t)i] >= nv) objective += b[(size_t)i];
    if (objective != 0) return std::nullopt;
    std::vector<Rational> y((size_t)nv);
    for (int i = 0; i < rows; ++i)
        if (basis[(size_t)i] < nv) y[(size_t)basis[(size_t)i]] = b[(size_t)i];
    return y;
}

}

bool validate_witness(const RationalPoint& p, const GeneratorSet& gens, const HullWitness& witness) {
    if (witness.coefficients.size() != gens.points.size()) return false;
    Rational sum = 0;
    for (const Rational& c : witness.coefficients) {
        if (c < 0) return false;
        sum += c;
    }
    if (sum != 1) return false;
    std::vector<Rational> target = flatten(p);
    std::vector<Rational> mix(target.size());
    for (size_t g = 0; g < gens.points.size(); ++g) {
        if (witness.coefficients[g] == 0) continue;
        std::vector<Rational> f = flatten(gens.points[g].point);
        if (f.size() != target.size()) return false;
        for (size_t i = 0; i < f.size(); ++i) mix[i] += witness.coefficients[g] * f[i];
    }
    return mix == target;
}

std::optional<HullWitness> hull_membership(const RationalPoint& p, const GeneratorSet& gens) {
    if (gens.points.empty()) throw std::invalid_argument("hull_membership: no generators");
    std::vector<Rational> target = flatten(p);
    for (const auto& g : gens.points)
        if (flatten(g.point).size() != target.size())
            throw std::invalid_argument("hull_membership: format mismatch");

    int rows = (int)target.size() + 1;
    int nv = (int)gens.points.size();
    RatMat a(rows, nv);
    std::vector<Rational> b((size_t)rows);
    for (int g = 0; g < nv; ++g) {
        std::vector<Rational> f = flatten(gens.points[(size_t)g].point);
        for (size_t i = 0; i < f.size(); ++i) a.at((int)i, g) = f[i];
        a.at(rows - 1, g) = 1;
    }
    for (size_t i = 0; i < target.size(); ++i) b[i] = target[i];
    b[(size_t)rows - 1] = 1;

    auto y = lp_feasible(std::move(a), std::move(b));
    if (!y) return std::nullopt;
    HullWitness w{std::move(*y)};
    if (!validate_witness(p, gens, w)) throw defect_error("simplex witness failed revalidation");
    return w;
}

namespace {

// All partitions of d into at most m pairwise distinct parts (with at most
// one zero slot when read in m slots).
std::vector<Partition> regular_partitions(int d, int m) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(d, m))
        if (p.len() >= m - 1 && is_regular({p, m})) out.push_back(p);
    return out;
}

Rational block_distance(const Partition& lambda, int d, const std::vector<Rational>& target) {
    Rational worst = 0;
    for (size_t i = 0; i < target.size(); ++i) {
        Rational diff = Rational(lambda[(int)i], d) - target[i];
        if (diff < 0) diff = -diff;
        if (diff > worst) worst = diff;
    }
    return worst;
}

}

bool verify_unit_polytope_density(int m, int max_degree, int samples, unsigned long long seed) {
    if (m < 1 || max_degree < 1) throw std::invalid_argument("verify_unit_polytope_density: bad sizes");

    // (a) all-regular triples are accepted
    for (int d = 1; d <= max_degree; ++d) {
        auto regs = regular_partitions(d, m);
        for (const Partition& a : regs)
            for (const Partition& b : regs)
                for (const Partition& c : regs)
                    if (!in_So_unit(make_weight_triple(a, b, c, {m, m, m}), m)) return false;
    }

    // (b) sampled simplex points are approximable by normalized regular triples
    Rng rng(derive_seed(seed, 0x64656e73));
    Rational tol(1, max_degree);
    for (int s = 0; s < samples; ++s) {
        std::array<std::vector<Rational>, 3> q;
        for (int i = 0; i < 3; ++i) {
            std::vector<long long> raw((size_t)m);
            long long total = 0;
            do {
                total = 0;
                for (auto& x : raw) {
                    x = rng.between(0, 24);
                    total += x;
                }
            } while (total == 0);
            std::sort(raw.begin(), raw.end(), std::greater<>());
            for (long long x : raw) q[(size_t)i].emplace_back(x, total);
        }
        bool close_enough = false;
        for (int d = 1; d <= m * max_degree && !close_enough; ++d) {
            auto regs = regular_partitions(d, m);
            if (regs.empty()) continue;
            bool all_ok = true;
            for (int i = 0; i < 3 && all_ok; ++i) {
                Rational best(-1);
                for (const Partition& lam : regs) {
                    Rational dist = block_distance(lam, d, q[(size_t)i]);
                    if (best < 0 || dist < best) best = dist;
                }
                all_ok = best <= tol;
            }
            close_enough = all_ok;
        }
        if (!close_enough) return false;
    }
    return true;
}

std::optional<UniformMembership> verify_uniform_membership(int m, int max_degree, long long trials,
                                                           unsigned long long seed) {
    if (m < 1) throw std::invalid_argument("verify_uniform_membership: m must be positive");
    RankOneDecomposition unit = unit_tensor(m);
    for (int ell = 1; ell * m <= max_degree; ++ell) {
        std::vector<int> parts((size_t)m, ell);
        Partition lam(parts);
        if (kronecker(lam, lam, lam) == 0) continue;
        WeightTriple triple = make_weight_triple(lam, lam, lam, {m, m, m});
        auto cert = certify_in_S(triple, unit, trials, seed);
        if (cert) return UniformMembership{ell, std::move(*cert)};
    }
    return std::nullopt;
}

}
