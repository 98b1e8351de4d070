#include "gct/symgroup.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gct {

BigInt class_size(const CycleType& rho) {
    BigInt denom = 1;
    int i = 0;
    while (i < rho.len()) {
        int j = i;
        while (j < rho.len() && rho[j] == rho[i]) ++j;
        const int mult = j - i;
        for (int t = 0; t < mult; ++t) denom *= rho[i];
        denom *= factorial(mult);
        i = j;
    }
    return factorial(rho.size()) / denom;
}

namespace {

// Beta-set border-strip recursion. beta holds distinct values
// lambda_i + (L-1-i); removing a strip of size k replaces one beta value b by
// b-k when b-k is free; the sign is (-1)^(number of beta values jumped over).
BigInt chi_rec(std::vector<int> beta, const std::vector<int>& rho, size_t idx,
               std::map<std::pair<std::vector<int>, size_t>, BigInt>& memo) {
    // normalize: drop a full staircase of trailing values 0,1,..,t-1 present
    std::sort(beta.begin(), beta.end());
    size_t low = 0;
    while (low < beta.size() && beta[low] == static_cast<int>(low)) ++low;
    if (idx == rho.size()) {
        // remaining shape must be empty: beta = {0,1,...,n-1}
        return low == beta.size() ? 1 : 0;
    }
    const auto key = std::make_pair(beta, idx);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    const int k = rho[idx];
    BigInt total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0) continue;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        int jumped = 0;  // beta values strictly between target and beta[i]
        for (size_t j = 0; j < beta.size(); ++j)
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        std::vector<int> next = beta;
        next[i] = target;
        const BigInt sub = chi_rec(std::move(next), rho, idx + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

std::vector<int> beta_set(const Partition& lambda) {
    const int L = lambda.len();
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = lambda[i] + (L - 1 - i);
    return beta;
}

}

BigInt character(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character: size mismatch");
    std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;
    // remove the largest parts first: fewer branches early
    std::vector<int> parts = rho.parts().empty() ? std::vector<int>{} : rho.parts();
    return chi_rec(beta_set(lambda), parts, 0, memo);
}

BigInt irrep_dimension(const Partition& lambda) {
    if (lambda.size() == 0) return 1;
    std::vector<int> ones(static_cast<size_t>(lambda.size()), 1);
    return character(lambda, CycleType(std::move(ones)));
}

BigInt hook_length_dimension(const Partition& lambda) {
    const Partition t = transpose(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.len(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (t[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

CharacterTable::CharacterTable(int degree) : degree_(degree) {
    labels_ = enumerate_partitions(degree, degree);
    for (size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = static_cast<int>(i);
    class_sizes_.reserve(labels_.size());
    for (const auto& rho : labels_) class_sizes_.push_back(class_size(rho));
    entries_.resize(labels_.size() * labels_.size());
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = 0; j < labels_.size(); ++j)
            entries_[i * labels_.size() + j] = character(labels_[i], labels_[j]);
}

int CharacterTable::index_of(const Partition& p) const {
    const auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("partition not in table: " + format_partition(p));
    return it->second;
}

const CharacterTable& CharacterTable::get(int degree) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[degree];
    if (!slot) slot.reset(new CharacterTable(degree));
    return *slot;
}

}
