// Command line front end. Outputs on stdout are deterministic for a fixed
// seed and flag set, independent of the thread count; anything diagnostic
// goes to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gct/error.hpp"
#include "gct/hwv.hpp"
#include "gct/kronecker.hpp"
#include "gct/obstructions.hpp"
#include "gct/partition.hpp"
#include "gct/permutation.hpp"
#include "gct/polytopes.hpp"
#include "gct/stabilizer_invariants.hpp"
#include "gct/symgroup.hpp"
#include "gct/tableaux.hpp"
#include "gct/tensors.hpp"

using njson = nlohmann::ordered_json;
using namespace gct;

namespace {

int resolve_threads(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("GCT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list entry: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::array<int, 3> parse_format3(const std::string& text) {
    auto v = parse_int_list(text);
    if (v.size() != 3) throw std::invalid_argument("expected three comma-separated sizes");
    return {v[0], v[1], v[2]};
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num) / den;
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational: '" + text + "'");
    }
}

// A --tensor argument is a readable file path or a built-in name.
RankOneDecomposition load_tensor(const std::string& source) {
    std::ifstream in(source);
    if (in) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_decomposition(buffer.str());
    }
    return decomposition_by_name(source);
}

// The triple format is the tensor's when it fits, otherwise widened so that
// construction succeeds; evaluation guards degeneracy against the tensor.
WeightTriple triple_for(const Partition& l1, const Partition& l2, const Partition& l3,
                        std::array<int, 3> base) {
    base[0] = std::max(base[0], l1.len());
    base[1] = std::max(base[1], l2.len());
    base[2] = std::max(base[2], l3.len());
    return make_weight_triple(l1, l2, l3, base);
}

njson weight_json(const WeightTriple& t) {
    njson j;
    j["lambda1"] = format_partition(t.lambda1);
    j["lambda2"] = format_partition(t.lambda2);
    j["lambda3"] = format_partition(t.lambda3);
    j["degree"] = t.degree;
    j["format"] = t.format;
    return j;
}

njson perms_json(const PermTriple& p) {
    njson j;
    j["p1"] = format_cycles(p.p1);
    j["p2"] = format_cycles(p.p2);
    j["p3"] = format_cycles(p.p3);
    return j;
}

njson mat_json(const IntMat& m) {
    njson rows = njson::array();
    for (int r = 0; r < m.rows; ++r) {
        njson row = njson::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(to_decimal(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

njson cert_json(const EvalCertificate& cert) {
    njson j;
    j["weight"] = weight_json(cert.weight);
    j["perms"] = perms_json(cert.perms);
    if (cert.g) {
        njson g;
        g["g1"] = mat_json(cert.g->g1);
        g["g2"] = mat_json(cert.g->g2);
        g["g3"] = mat_json(cert.g->g3);
        j["g"] = std::move(g);
    } else {
        j["g"] = nullptr;
    }
    j["value"] = to_decimal(cert.value);
    j["tensor_digest"] = cert.tensor_digest;
    j["trial"] = cert.trial;
    j["seed"] = cert.seed;
    return j;
}

void emit(const njson& j) { std::cout << j.dump(2) << "\n"; }

struct PolytopeFiles {
    static GeneratorSet load_generators(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open generator file: " + path);
        njson j = njson::parse(in);
        GeneratorSet gens;
        auto fmt = j.at("format");
        if (!fmt.is_array() || fmt.size() != 3) throw std::invalid_argument("bad generator format");
        gens.format = {fmt[0].get<int>(), fmt[1].get<int>(), fmt[2].get<int>()};
        for (const auto& entry : j.at("points")) {
            WeightTriple t = make_weight_triple(parse_partition(entry.at("lambda1").get<std::string>()),
                                                parse_partition(entry.at("lambda2").get<std::string>()),
                                                parse_partition(entry.at("lambda3").get<std::string>()),
                                                gens.format);
            gens.points.push_back(GeneratorPoint{normalize(t), t});
        }
        return gens;
    }

    static RationalPoint load_point(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open point file: " + path);
        njson j = njson::parse(in);
        std::array<std::vector<Rational>, 3> blocks;
        auto arr = j.at("blocks");
        if (!arr.is_array() || arr.size() != 3) throw std::invalid_argument("point needs three blocks");
        for (size_t i = 0; i < 3; ++i)
            for (const auto& x : arr[i]) blocks[i].push_back(parse_rational(x.get<std::string>()));
        return make_rational_point(std::move(blocks));
    }

    static njson generators_json(const GeneratorSet& gens, int max_degree) {
        njson j;
        j["format"] = gens.format;
        j["max_degree"] = max_degree;
        njson points = njson::array();
        for (const auto& gp : gens.points) {
            njson p;
            p["lambda1"] = format_partition(gp.source.lambda1);
            p["lambda2"] = format_partition(gp.source.lambda2);
            p["lambda3"] = format_partition(gp.source.lambda3);
            njson blocks = njson::array();
            for (const auto& block : gp.point.blocks) {
                njson b = njson::array();
                for (const auto& x : block) b.push_back(to_fraction(x));
                blocks.push_back(std::move(b));
            }
            p["point"] = std::move(blocks);
            points.push_back(std::move(p));
        }
        j["points"] = std::move(points);
        return j;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact representation-theoretic obstructions for tensor border rank"};
    app.require_subcommand(1);
    int rc = 0;

    // kron
    std::string kron_lambda, kron_mu, kron_nu;
    bool kron_json = false;
    auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient g(lambda, mu, nu)");
    kron_cmd->add_option("--lambda", kron_lambda)->required();
    kron_cmd->add_option("--mu", kron_mu)->required();
    kron_cmd->add_option("--nu", kron_nu)->required();
    kron_cmd->add_flag("--json", kron_json, "wrap the value as {\"g\": \"<decimal>\"}");
    kron_cmd->callback([&] {
        BigInt g = kronecker(parse_partition(kron_lambda), parse_partition(kron_mu),
                             parse_partition(kron_nu));
        if (kron_json) {
            njson j;
            j["g"] = to_decimal(g);
            emit(j);
        } else {
            std::cout << to_decimal(g) << "\n";
        }
    });

    // kron-points
    std::string kp_format;
    int kp_max_degree = 0;
    auto* kp_cmd = app.add_subcommand("kron-points", "nonzero-Kronecker triples within a format");
    kp_cmd->add_option("--format", kp_format)->required();
    kp_cmd->add_option("--max-degree", kp_max_degree)->required();
    kp_cmd->callback([&] {
        for (const auto& t : kronecker_semigroup_points(parse_format3(kp_format), kp_max_degree))
            std::cout << format_partition(t.lambda1) << " | " << format_partition(t.lambda2)
                      << " | " << format_partition(t.lambda3) << "\n";
    });

    // char
    std::string char_lambda, char_rho;
    auto* char_cmd = app.add_subcommand("char", "symmetric group character chi_lambda(rho)");
    char_cmd->add_option("--lambda", char_lambda)->required();
    char_cmd->add_option("--rho", char_rho)->required();
    char_cmd->callback([&] {
        std::cout << to_decimal(character(parse_partition(char_lambda), parse_partition(char_rho)))
                  << "\n";
    });

    // kostka
    std::string kostka_shape, kostka_content;
    auto* kostka_cmd = app.add_subcommand("kostka", "weight space dimension (Kostka number)");
    kostka_cmd->add_option("--shape", kostka_shape)->required();
    kostka_cmd->add_option("--content", kostka_content)->required();
    kostka_cmd->callback([&] {
        std::cout << weight_space_dim(parse_partition(kostka_shape), parse_int_list(kostka_content))
                  << "\n";
    });

    // straighten
    std::string str_shape, str_rows;
    auto* str_cmd = app.add_subcommand("straighten", "semistandard expansion of a tableau vector");
    str_cmd->add_option("--shape", str_shape)->required();
    str_cmd->add_option("--rows", str_rows, "rows as \"1,2;2\"")->required();
    str_cmd->callback([&] {
        Tableau t = make_tableau(parse_partition(str_shape), parse_tableau_rows(str_rows));
        StraightExpansion e = straighten(t);
        if (e.terms.empty()) {
            std::cout << "0\n";
            return;
        }
        for (const auto& [s, coeff] : e.terms)
            std::cout << to_decimal(coeff) << " " << format_tableau_rows(s) << "\n";
    });

    // staircase
    int stair_m = 0, stair_d = 0;
    auto* stair_cmd = app.add_subcommand("staircase", "dominance-least regular weight");
    stair_cmd->add_option("--m", stair_m)->required();
    stair_cmd->add_option("--d", stair_d)->required();
    stair_cmd->callback([&] { std::cout << format_partition(staircase(stair_m, stair_d)) << "\n"; });

    // invdim unit | matmul
    auto* invdim_cmd = app.add_subcommand("invdim", "stabilizer invariant dimensions");
    invdim_cmd->require_subcommand(1);
    int iu_m = 0;
    std::string iu_l1, iu_l2, iu_l3;
    auto* iu_cmd = invdim_cmd->add_subcommand("unit", "against the unit tensor stabilizer");
    iu_cmd->add_option("--m", iu_m)->required();
    iu_cmd->add_option("--l1", iu_l1)->required();
    iu_cmd->add_option("--l2", iu_l2)->required();
    iu_cmd->add_option("--l3", iu_l3)->required();
    iu_cmd->callback([&] {
        WeightTriple t = triple_for(parse_partition(iu_l1), parse_partition(iu_l2),
                                    parse_partition(iu_l3), {iu_m, iu_m, iu_m});
        std::cout << to_decimal(unit_invariant_dim(t, iu_m)) << "\n";
    });
    std::string im_n, im_l12, im_l23, im_l31;
    auto* im_cmd = invdim_cmd->add_subcommand("matmul", "against the matmul tensor stabilizer");
    im_cmd->add_option("--n", im_n, "n1,n2,n3")->required();
    im_cmd->add_option("--l12", im_l12)->required();
    im_cmd->add_option("--l23", im_l23)->required();
    im_cmd->add_option("--l31", im_l31)->required();
    im_cmd->callback([&] {
        auto n = parse_format3(im_n);
        std::cout << to_decimal(matmul_invariant_dim(parse_partition(im_l12), parse_partition(im_l23),
                                                     parse_partition(im_l31),
                                                     MatmulFormat{n[0], n[1], n[2]}))
                  << "\n";
    });

    // barrier
    int bar_m = 0;
    std::string bar_l1, bar_l2, bar_l3;
    auto* bar_cmd = app.add_subcommand("barrier", "smallest shift entering the larger orbit support");
    bar_cmd->add_option("--m", bar_m)->required();
    bar_cmd->add_option("--l1", bar_l1)->required();
    bar_cmd->add_option("--l2", bar_l2)->required();
    bar_cmd->add_option("--l3", bar_l3)->required();
    bar_cmd->callback([&] {
        WeightTriple t = make_weight_triple(parse_partition(bar_l1), parse_partition(bar_l2),
                                            parse_partition(bar_l3), {bar_m, bar_m, bar_m});
        BarrierLift lift = barrier_lift(t, bar_m);
        std::cout << "k=" << lift.k << "\n"
                  << "lifted: " << format_partition(lift.lifted.lambda1) << " | "
                  << format_partition(lift.lifted.lambda2) << " | "
                  << format_partition(lift.lifted.lambda3) << "\n";
    });

    // tensor emit
    auto* tensor_cmd = app.add_subcommand("tensor", "rank-one decompositions");
    tensor_cmd->require_subcommand(1);
    std::string te_name;
    auto* te_cmd = tensor_cmd->add_subcommand("emit", "write a named decomposition to stdout");
    te_cmd->add_option("--name", te_name, "unit:m | matmul:n1,n2,n3 | strassen")->required();
    te_cmd->callback([&] { std::cout << serialize_decomposition(decomposition_by_name(te_name)); });

    // hwv eval | certify
    auto* hwv_cmd = app.add_subcommand("hwv", "highest weight vector evaluations");
    hwv_cmd->require_subcommand(1);
    std::string he_l1, he_l2, he_l3, he_p1 = "id", he_p2 = "id", he_p3 = "id", he_tensor;
    int he_threads = 0;
    auto* he_cmd = hwv_cmd->add_subcommand("eval", "evaluate one permuted tableau functional");
    he_cmd->add_option("--l1", he_l1)->required();
    he_cmd->add_option("--l2", he_l2)->required();
    he_cmd->add_option("--l3", he_l3)->required();
    he_cmd->add_option("--perm1", he_p1, "cycles, e.g. \"(1 2)(3 4)\"");
    he_cmd->add_option("--perm2", he_p2);
    he_cmd->add_option("--perm3", he_p3);
    he_cmd->add_option("--tensor", he_tensor, "file path or built-in name")->required();
    he_cmd->add_option("--threads", he_threads);
    he_cmd->callback([&] {
        RankOneDecomposition w = load_tensor(he_tensor);
        WeightTriple t = triple_for(parse_partition(he_l1), parse_partition(he_l2),
                                    parse_partition(he_l3), w.format);
        PermTriple perms{parse_cycles(he_p1, t.degree), parse_cycles(he_p2, t.degree),
                         parse_cycles(he_p3, t.degree)};
        std::cout << to_decimal(evaluate(t, perms, w, resolve_threads(he_threads))) << "\n";
    });

    std::string hc_l1, hc_l2, hc_l3, hc_tensor;
    long long hc_trials = 512;
    unsigned long long hc_seed = 1;
    int hc_threads = 0, hc_g_bound = 2;
    bool hc_random_g = true;
    auto* hc_cmd = hwv_cmd->add_subcommand("certify", "search for a nonzero evaluation");
    hc_cmd->add_option("--l1", hc_l1)->required();
    hc_cmd->add_option("--l2", hc_l2)->required();
    hc_cmd->add_option("--l3", hc_l3)->required();
    hc_cmd->add_option("--tensor", hc_tensor)->required();
    hc_cmd->add_option("--trials", hc_trials);
    hc_cmd->add_option("--seed", hc_seed);
    hc_cmd->add_option("--threads", hc_threads);
    hc_cmd->add_flag("--random-g,!--no-random-g", hc_random_g,
                     "retry vanishing random trials at a seeded group translate");
    hc_cmd->add_option("--g-bound", hc_g_bound);
    hc_cmd->callback([&] {
        RankOneDecomposition w = load_tensor(hc_tensor);
        WeightTriple t = triple_for(parse_partition(hc_l1), parse_partition(hc_l2),
                                    parse_partition(hc_l3), w.format);
        auto cert = certify_in_S(t, w, hc_trials, hc_seed,
                                 CertifyOptions{resolve_threads(hc_threads), hc_random_g, hc_g_bound});
        if (!cert) {
            std::cout << "null\n";
            rc = 1;
            return;
        }
        emit(cert_json(*cert));
    });

    // obstruct matmul | search
    auto* obs_cmd = app.add_subcommand("obstruct", "two-sided border rank obstructions");
    obs_cmd->require_subcommand(1);
    int om_n = 2, om_threads = 0;
    long long om_trials = 10000;
    unsigned long long om_seed = 42;
    std::string om_decomp = "strassen";
    auto* om_cmd = obs_cmd->add_subcommand("matmul", "rank weight against square matmul");
    om_cmd->add_option("--n", om_n, "matrix size");
    om_cmd->add_option("--decomp", om_decomp, "strassen | naive | file path");
    om_cmd->add_option("--trials", om_trials);
    om_cmd->add_option("--seed", om_seed);
    om_cmd->add_option("--threads", om_threads);
    om_cmd->callback([&] {
        WeightTriple triple = matmul_obstruction_weight(om_n);
        RankOneDecomposition w;
        if (om_decomp == "strassen") {
            if (om_n != 2) throw std::invalid_argument("the seven-term decomposition is 2x2 only");
            w = strassen_decomposition();
        } else if (om_decomp == "naive") {
            w = matmul_tensor(MatmulFormat{om_n, om_n, om_n});
        } else {
            w = load_tensor(om_decomp);
        }
        int m = om_n * om_n + 1;
        std::string name = "⟨" + std::to_string(om_n) + "," + std::to_string(om_n) + "," +
                           std::to_string(om_n) + "⟩";
        ObstructionReport report =
            run_obstruction(triple, w, m, om_trials, om_seed,
                            CertifyOptions{resolve_threads(om_threads), true, 2}, name);
        njson j;
        j["weight"] = weight_json(report.weight);
        j["target_m"] = report.target_m;
        j["not_in_So"] = report.not_in_So;
        njson breakdown;
        breakdown["total"] = to_decimal(report.so_breakdown.total);
        njson terms = njson::array();
        for (const auto& [alpha, dim] : report.so_breakdown.terms) {
            njson term;
            term["alpha"] = format_partition(alpha);
            term["dim"] = to_decimal(dim);
            terms.push_back(std::move(term));
        }
        breakdown["terms"] = std::move(terms);
        j["so_breakdown"] = std::move(breakdown);
        j["certificate"] = report.membership ? cert_json(*report.membership) : njson(nullptr);
        j["conclusion"] = report.conclusion ? njson(*report.conclusion) : njson(nullptr);
        emit(j);
        if (report.conclusion) {
            std::cout << "excluded from the orbit support and certified on the input tensor: "
                      << *report.conclusion << "\n";
        } else if (!report.not_in_So) {
            std::cout << "inconclusive: the weight lies in the orbit support\n";
            rc = 1;
        } else {
            std::cout << "inconclusive: no nonzero evaluation within the trial budget\n";
            rc = 1;
        }
    });

    std::string os_tensor;
    int os_m = 0, os_degree = 0, os_threads = 0;
    long long os_trials = 64;
    unsigned long long os_seed = 1;
    auto* os_cmd = obs_cmd->add_subcommand("search", "scan all weights of one degree");
    os_cmd->add_option("--tensor", os_tensor)->required();
    os_cmd->add_option("--m", os_m, "unit tensor size to exclude from")->required();
    os_cmd->add_option("--degree", os_degree)->required();
    os_cmd->add_option("--trials", os_trials);
    os_cmd->add_option("--seed", os_seed);
    os_cmd->add_option("--threads", os_threads);
    os_cmd->callback([&] {
        RankOneDecomposition w = load_tensor(os_tensor);
        auto hits = obstruction_search(w, os_m, os_degree, os_trials, os_seed,
                                       CertifyOptions{resolve_threads(os_threads), true, 2});
        for (const auto& r : hits)
            std::cout << "hit: " << format_partition(r.weight.lambda1) << " | "
                      << format_partition(r.weight.lambda2) << " | "
                      << format_partition(r.weight.lambda3) << " -> " << *r.conclusion << "\n";
        std::cout << hits.size() << " obstruction(s) at degree " << os_degree << "\n";
        if (hits.empty()) rc = 1;
    });

    // polytope member | kron-gens
    auto* poly_cmd = app.add_subcommand("polytope", "moment polytope membership");
    poly_cmd->require_subcommand(1);
    std::string pm_point, pm_gens;
    auto* pm_cmd = poly_cmd->add_subcommand("member", "exact convex hull membership");
    pm_cmd->add_option("--point", pm_point)->required();
    pm_cmd->add_option("--gens", pm_gens)->required();
    pm_cmd->callback([&] {
        GeneratorSet gens = PolytopeFiles::load_generators(pm_gens);
        RationalPoint p = PolytopeFiles::load_point(pm_point);
        auto witness = hull_membership(p, gens);
        njson j;
        if (witness && validate_witness(p, gens, *witness)) {
            j["member"] = true;
            njson coeffs = njson::array();
            for (const auto& c : witness->coefficients) coeffs.push_back(to_fraction(c));
            j["coefficients"] = std::move(coeffs);
        } else if (witness) {
            throw defect_error("hull witness failed revalidation");
        } else {
            j["member"] = false;
        }
        emit(j);
    });

    std::string pg_format, pg_out;
    int pg_max_degree = 0;
    auto* pg_cmd = poly_cmd->add_subcommand("kron-gens", "emit nonzero-Kronecker generators");
    pg_cmd->add_option("--format", pg_format)->required();
    pg_cmd->add_option("--max-degree", pg_max_degree)->required();
    pg_cmd->add_option("-o,--output", pg_out, "write to a file instead of stdout");
    pg_cmd->callback([&] {
        GeneratorSet gens = kronecker_generators(parse_format3(pg_format), pg_max_degree);
        njson j = PolytopeFiles::generators_json(gens, pg_max_degree);
        if (pg_out.empty()) {
            emit(j);
        } else {
            std::ofstream out(pg_out);
            if (!out) throw std::invalid_argument("cannot open output file: " + pg_out);
            out << j.dump(2) << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const defect_error& e) {
        std::cerr << "defect: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
