#include "gct/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gct {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool dominance_leq(const Partition& alpha, const Partition& lambda) {
    if (alpha.size() != lambda.size()) return false;
    long long sa = 0, sl = 0;
    const int n = std::max(alpha.len(), lambda.len());
    for (int i = 0; i < n; ++i) {
        sa += alpha[i];
        sl += lambda[i];
        if (sa > sl) return false;
    }
    return true;
}

Partition meet(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("meet requires equal partition sizes");
    const int n = std::max(a.len(), b.len());
    std::vector<int> parts(n);
    long long pa = 0, pb = 0, prev = 0;
    for (int i = 0; i < n; ++i) {
        pa += a[i];
        pb += b[i];
        const long long cur = std::min(pa, pb);
        parts[static_cast<size_t>(i)] = static_cast<int>(cur - prev);
        prev = cur;
    }
    return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
    std::vector<int> parts;
    if (p.len() > 0) {
        parts.resize(static_cast<size_t>(p[0]));
        for (int j = 0; j < p[0]; ++j) {
            int count = 0;
            while (count < p.len() && p[count] > j) ++count;
            parts[static_cast<size_t>(j)] = count;
        }
    }
    return Partition(std::move(parts));
}

bool is_regular(BoundedPartitionView v) {
    if (v.partition.len() > v.slots)
        throw std::invalid_argument("partition has more parts than slots");
    for (int i = 0; i + 1 < v.partition.len(); ++i)
        if (v.partition[i] == v.partition[i + 1]) return false;
    return v.slots - v.partition.len() <= 1;
}

Partition box_partition(int m, int d) {
    if (m < 0 || d < 0) throw std::invalid_argument("box_partition arguments must be nonnegative");
    if (m == 0) {
        if (d > 0) throw std::invalid_argument("box_partition: no slots for a positive size");
        return Partition();
    }
    const int q = d / m, r = d % m;
    std::vector<int> parts(static_cast<size_t>(m), q);
    for (int i = 0; i < r; ++i) parts[static_cast<size_t>(i)] = q + 1;
    return Partition(std::move(parts));
}

Partition staircase(int m, int d) {
    if (d < 1) throw std::invalid_argument("staircase requires d >= 1");
    if (m < 1) throw std::invalid_argument("staircase requires m >= 1");
    int l = 1;
    while (l + 1 <= m && (l + 1) * (l + 2) / 2 <= d) ++l;
    const Partition box = box_partition(l, d - l * (l + 1) / 2);
    std::vector<int> parts(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) parts[static_cast<size_t>(i)] = (l - i) + box[i];
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, int max_parts, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

}

std::vector<Partition> enumerate_partitions(int d, int max_parts) {
    if (d < 0 || max_parts < 0) throw std::invalid_argument("enumerate_partitions arguments must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(d, d, max_parts, acc, out);
    return out;
}

std::vector<Partition> enumerate_dominated(const Partition& bound, int slots) {
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(bound.size(), slots))
        if (dominance_leq(p, bound)) out.push_back(std::move(p));
    return out;
}

Partition partition_add(const Partition& a, const Partition& b) {
    const int n = std::max(a.len(), b.len());
    std::vector<int> parts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parts[static_cast<size_t>(i)] = a[i] + b[i];
    return Partition(std::move(parts));
}

namespace {

int parse_natural(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad number in partition: '" + s + "'");
    return std::stoi(s);
}

}

Partition parse_partition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)) || c == ' ') t += c;
    // trim
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    if (t.empty() || t == "()") return Partition();

    std::vector<int> parts;
    if (t.find(',') != std::string::npos) {
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            while (!item.empty() && item.front() == ' ') item.erase(item.begin());
            while (!item.empty() && item.back() == ' ') item.pop_back();
            parts.push_back(parse_natural(item));
        }
    } else {
        // frequency notation: space-separated terms "v" or "v^k"
        std::stringstream ss(t);
        std::string term;
        while (ss >> term) {
            const auto caret = term.find('^');
            if (caret == std::string::npos) {
                parts.push_back(parse_natural(term));
            } else {
                const int v = parse_natural(term.substr(0, caret));
                const int k = parse_natural(term.substr(caret + 1));
                for (int i = 0; i < k; ++i) parts.push_back(v);
            }
        }
        if (parts.empty()) throw std::invalid_argument("empty partition text: '" + text + "'");
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "()";
    std::string out;
    for (int i = 0; i < p.len(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

std::vector<int> padded(const Partition& p, int slots) {
    if (p.len() > slots) throw std::invalid_argument("partition has more parts than slots");
    std::vector<int> v(static_cast<size_t>(slots), 0);
    for (int i = 0; i < p.len(); ++i) v[static_cast<size_t>(i)] = p[i];
    return v;
}

}
