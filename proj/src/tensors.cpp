#include "gct/tensors.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "gct/error.hpp"

namespace gct {

namespace {

std::vector<BigInt> basis_vec(int m, int j) {  // j 0-based
    std::vector<BigInt> v(m);
    v[j] = 1;
    return v;
}

std::vector<BigInt> from_ints(std::initializer_list<int> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

}

RankOneDecomposition unit_tensor(int m) {
    if (m < 1) throw std::invalid_argument("unit_tensor: m must be positive");
    RankOneDecomposition w;
    w.format = {m, m, m};
    for (int j = 0; j < m; ++j)
        w.terms.push_back({basis_vec(m, j), basis_vec(m, j), basis_vec(m, j)});
    return w;
}

RankOneDecomposition matmul_tensor(const MatmulFormat& fmt) {
    if (fmt.n1 < 1 || fmt.n2 < 1 || fmt.n3 < 1)
        throw std::invalid_argument("matmul_tensor: format entries must be positive");
    RankOneDecomposition w;
    w.format = {fmt.n1 * fmt.n2, fmt.n2 * fmt.n3, fmt.n3 * fmt.n1};
    for (int i = 1; i <= fmt.n1; ++i)
        for (int j = 1; j <= fmt.n2; ++j)
            for (int k = 1; k <= fmt.n3; ++k)
                w.terms.push_back({basis_vec(w.format[0], (i - 1) * fmt.n2 + (j - 1)),
                                   basis_vec(w.format[1], (j - 1) * fmt.n3 + (k - 1)),
                                   basis_vec(w.format[2], (k - 1) * fmt.n1 + (i - 1))});
    return w;
}

RankOneDecomposition strassen_decomposition() {
    RankOneDecomposition w;
    w.format = {4, 4, 4};
    auto add = [&w](std::initializer_list<int> a, std::initializer_list<int> b,
                    std::initializer_list<int> c) {
        w.terms.push_back({from_ints(a), from_ints(b), from_ints(c)});
    };
    add({1, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1});
    add({0, 0, 1, 1}, {1, 0, 0, 0}, {0, 1, 0, -1});
    add({1, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, 1});
    add({0, 0, 0, 1}, {-1, 0, 1, 0}, {1, 1, 0, 0});
    add({1, 1, 0, 0}, {0, 0, 0, 1}, {-1, 0, 1, 0});
    add({-1, 0, 1, 0}, {1, 1, 0, 0}, {0, 0, 0, 1});
    add({0, 1, 0, -1}, {0, 0, 1, 1}, {1, 0, 0, 0});

    for (const auto& t : w.terms)
        for (const auto* v : {&t.a, &t.b, &t.c})
            for (const BigInt& x : *v)
                if (x < -1 || x > 1) throw defect_error("seven-term scheme left {-1,0,1}");
    if (dense_expand(w) != dense_expand(matmul_tensor({2, 2, 2})))
        throw defect_error("seven-term scheme does not expand to 2x2 matrix multiplication");
    return w;
}

GroupElement identity_group_element(const std::array<int, 3>& format) {
    return {IntMat::identity(format[0]), IntMat::identity(format[1]), IntMat::identity(format[2])};
}

GroupElement random_group_element(const std::array<int, 3>& format, int bound,
                                  unsigned long long seed) {
    if (bound < 1) throw std::invalid_argument("random_group_element: bound must be positive");
    Rng rng(derive_seed(seed, 0x67656c65));
    auto sample = [&rng, bound](int n) {
        while (true) {
            IntMat m(n, n);
            for (auto& x : m.a) x = rng.between(-bound, bound);
            if (det_bareiss(m) != 0) return m;
        }
    };
    GroupElement g;
    g.g1 = sample(format[0]);
    g.g2 = sample(format[1]);
    g.g3 = sample(format[2]);
    return g;
}

namespace {

std::vector<BigInt> mat_apply(const IntMat& g, const std::vector<BigInt>& v) {
    if (g.cols != (int)v.size()) throw std::invalid_argument("group element format mismatch");
    std::vector<BigInt> out(g.rows);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j)
            if (g.at(i, j) != 0) out[i] += g.at(i, j) * v[j];
    return out;
}

}

RankOneDecomposition apply_group(const GroupElement& g, const RankOneDecomposition& w) {
    if (g.g1.cols != w.format[0] || g.g2.cols != w.format[1] || g.g3.cols != w.format[2])
        throw std::invalid_argument("apply_group: format mismatch");
    RankOneDecomposition out;
    out.format = {g.g1.rows, g.g2.rows, g.g3.rows};
    for (const auto& t : w.terms)
        out.terms.push_back({mat_apply(g.g1, t.a), mat_apply(g.g2, t.b), mat_apply(g.g3, t.c)});
    return out;
}

std::vector<BigInt> dense_expand(const RankOneDecomposition& w, long long max_cells) {
    long long cells = 1LL * w.format[0] * w.format[1] * w.format[2];
    if (cells > max_cells) throw std::invalid_argument("dense_expand: size guard exceeded");
    std::vector<BigInt> out((size_t)cells);
    for (const auto& t : w.terms)
        for (int p = 0; p < w.format[0]; ++p) {
            if (t.a[p] == 0) continue;
            for (int q = 0; q < w.format[1]; ++q) {
                if (t.b[q] == 0) continue;
                BigInt ab = t.a[p] * t.b[q];
                for (int r = 0; r < w.format[2]; ++r)
                    if (t.c[r] != 0)
                        out[((size_t)p * w.format[1] + q) * w.format[2] + r] += ab * t.c[r];
            }
        }
    return out;
}

std::string serialize_decomposition(const RankOneDecomposition& w) {
    std::ostringstream os;
    os << "format " << w.format[0] << " " << w.format[1] << " " << w.format[2] << "\n";
    for (const auto& t : w.terms) {
        const std::vector<BigInt>* vs[3] = {&t.a, &t.b, &t.c};
        for (int i = 0; i < 3; ++i) {
            if (i) os << " | ";
            for (size_t j = 0; j < vs[i]->size(); ++j) {
                if (j) os << ",";
                os << (*vs[i])[j];
            }
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<BigInt> parse_int_list(const std::string& text, int expect) {
    std::vector<BigInt> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        size_t b = cur.find_first_not_of(" \t");
        size_t e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty entry in vector");
        out.emplace_back(cur.substr(b, e - b + 1));
    }
    if ((int)out.size() != expect)
        throw std::invalid_argument("vector length does not match the header format");
    return out;
}

}

RankOneDecomposition parse_decomposition(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    RankOneDecomposition w;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!header) {
            std::istringstream hs(line);
            std::string tag;
            hs >> tag >> w.format[0] >> w.format[1] >> w.format[2];
            if (tag != "format" || !hs || w.format[0] < 1 || w.format[1] < 1 || w.format[2] < 1)
                throw std::invalid_argument("decomposition header must be 'format m1 m2 m3'");
            header = true;
            continue;
        }
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t bar = line.find('|', start);
            fields.push_back(line.substr(start, bar == std::string::npos ? bar : bar - start));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        if (fields.size() != 3) throw std::invalid_argument("term line must have three '|' fields");
        w.terms.push_back({parse_int_list(fields[0], w.format[0]),
                           parse_int_list(fields[1], w.format[1]),
                           parse_int_list(fields[2], w.format[2])});
    }
    if (!header) throw std::invalid_argument("decomposition file is empty");
    return w;
}

RankOneDecomposition decomposition_by_name(const std::string& name) {
    if (name == "strassen") return strassen_decomposition();
    auto colon = name.find(':');
    std::string kind = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (kind == "unit") {
        int m = std::stoi(arg);
        return unit_tensor(m);
    }
    if (kind == "matmul") {
        MatmulFormat fmt;
        if (sscanf(arg.c_str(), "%d,%d,%d", &fmt.n1, &fmt.n2, &fmt.n3) != 3)
            throw std::invalid_argument("matmul decomposition wants n1,n2,n3");
        return matmul_tensor(fmt);
    }
    throw std::invalid_argument("unknown decomposition name: " + name);
}

std::string decomposition_digest(const RankOneDecomposition& w) {
    std::string text = serialize_decomposition(w);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

}
