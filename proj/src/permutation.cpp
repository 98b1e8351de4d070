#include "gct/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace gct {

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    return Perm(std::move(img));
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.img_[static_cast<size_t>(a - 1)], p.img_[static_cast<size_t>(b - 1)]);
    return p;
}

Perm Perm::cyclic_shift(int n, int s) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + s % n + n) % n;
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> img(static_cast<size_t>(degree()));
    for (int i = 0; i < degree(); ++i) img[static_cast<size_t>(i)] = apply(rhs.apply(i));
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(static_cast<size_t>(degree()));
    for (int i = 0; i < degree(); ++i) img[static_cast<size_t>(apply(i))] = i;
    return Perm(std::move(img));
}

int Perm::sign() const {
    return (degree() - cycle_type().len()) % 2 == 0 ? 1 : -1;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (apply(i) != i) return false;
    return true;
}

Partition Perm::cycle_type() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<int> lens;
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = apply(j)) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

Perm parse_cycles(const std::string& text, int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;

    std::string t = text;
    std::erase_if(t, [](char c) { return c == '\t' || c == '\n' || c == '\r'; });
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    if (t.empty() || t == "()" || t == "id") return Perm(std::move(img));

    size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] == ' ') { ++pos; continue; }
        if (t[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + text);
        const size_t close = t.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle notation: " + text);
        std::vector<int> cyc;
        size_t start = pos + 1;
        while (start < close) {
            if (t[start] == ' ' || t[start] == ',') { ++start; continue; }
            size_t end = start;
            while (end < close && t[end] != ' ' && t[end] != ',') ++end;
            const std::string num = t.substr(start, end - start);
            if (num.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad point in cycle notation: " + text);
            const int v = std::stoi(num);
            if (v < 1 || v > n) throw std::invalid_argument("cycle point out of range: " + num);
            cyc.push_back(v - 1);
            start = end;
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            const int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (img[static_cast<size_t>(from)] != from)
                throw std::invalid_argument("point repeated across cycles: " + text);
            img[static_cast<size_t>(from)] = to;
        }
        pos = close + 1;
    }
    return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
    std::string out;
    std::vector<char> seen(static_cast<size_t>(p.degree()), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<size_t>(i)] || p.apply(i) == i) continue;
        out += '(';
        bool first = true;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = p.apply(j)) {
            seen[static_cast<size_t>(j)] = 1;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm random_perm(Rng& rng, int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
    }
    return Perm(std::move(img));
}

}
