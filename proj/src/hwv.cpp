#include "gct/hwv.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "gct/error.hpp"
#include "gct/matrix.hpp"

namespace gct {

PermTriple identity_perm_triple(int d) {
    return {Perm::identity(d), Perm::identity(d), Perm::identity(d)};
}

namespace {

// Per-slot location of a tableau box: which determinant column it belongs to
// and which row of that determinant it fills.
struct SlotRef {
    int col = -1;
    int row = -1;
};

struct ColumnInfo {
    int factor = 0;
    int len = 0;
};

// Rows arrive one at a time; a fraction-free echelon of the rows seen so far
// rejects any row that is linearly dependent on the previous ones, killing
// the determinant and with it the whole subtree of term choices. The
// divisions below are exact (entries stay bordered minors of the arrival
// matrix); the big-integer instantiation asserts this.
template <typename T>
struct ColumnState {
    int len = 0;
    int filled = 0;
    std::vector<int> term_at;             // tableau row -> term index
    std::vector<std::vector<T>> reduced;  // echelon rows in arrival order
    std::vector<int> pivot;

    void reset(int n) {
        len = n;
        filled = 0;
        term_at.assign((size_t)n, -1);
        reduced.clear();
        pivot.clear();
    }

    bool try_add(std::vector<T> row, int tableau_row, int term) {
        for (size_t k = 0; k < reduced.size(); ++k) {
            const T diag = reduced[k][(size_t)pivot[k]];
            const T den = k == 0 ? T(1) : reduced[k - 1][(size_t)pivot[k - 1]];
            const T lead = row[(size_t)pivot[k]];
            for (int c = 0; c < len; ++c) {
                T num = row[(size_t)c] * diag - reduced[k][(size_t)c] * lead;
                if constexpr (std::is_same_v<T, BigInt>) {
                    if (num % den != 0) throw defect_error("echelon update division not exact");
                }
                row[(size_t)c] = num / den;
            }
        }
        int p = -1;
        for (int c = 0; c < len; ++c)
            if (row[(size_t)c] != 0) {
                p = c;
                break;
            }
        if (p < 0) return false;
        reduced.push_back(std::move(row));
        pivot.push_back(p);
        term_at[(size_t)tableau_row] = term;
        ++filled;
        return true;
    }

    void remove_last(int tableau_row) {
        reduced.pop_back();
        pivot.pop_back();
        term_at[(size_t)tableau_row] = -1;
        --filled;
    }
};

struct Plan {
    int d = 0, r = 0;
    std::array<int, 3> format{};
    std::array<std::vector<SlotRef>, 3> refs;  // [factor][slot]
    std::vector<ColumnInfo> cols;
    bool packable = false;  // determinant memo keys fit in 64 bits
    bool degenerate = false;
};

Plan build_plan(const WeightTriple& triple, const PermTriple& perms, const RankOneDecomposition& w) {
    Plan plan;
    plan.d = triple.degree;
    plan.r = (int)w.terms.size();
    plan.format = w.format;
    int max_len = 0;
    for (int i = 0; i < 3; ++i) {
        if (perms.perm(i).degree() != plan.d)
            throw std::invalid_argument("evaluate: permutation degree differs from the weight degree");
        if (triple.lambda(i).len() > plan.format[(size_t)i]) plan.degenerate = true;
        Partition mu = transpose(triple.lambda(i));
        Perm inv = perms.perm(i).inverse();
        plan.refs[i].assign((size_t)plan.d, SlotRef{});
        std::vector<int> col_start;
        int acc = 0;
        for (int j = 0; j < mu.len(); ++j) {
            col_start.push_back(acc);
            acc += mu[j];
            plan.cols.push_back({i, mu[j]});
            max_len = std::max(max_len, mu[j]);
        }
        int col_base = (int)plan.cols.size() - mu.len();
        for (int k = 0; k < plan.d; ++k) {
            int q = inv.apply(k);  // the box numbered q lands in slot k
            int j = 0;
            while (j + 1 < mu.len() && col_start[(size_t)(j + 1)] <= q) ++j;
            plan.refs[i][(size_t)k] = {col_base + j, q - col_start[(size_t)j]};
        }
    }
    plan.packable = plan.r <= 255 && max_len <= 6;
    return plan;
}

// Exact determinants of the raw term rows of completed columns, memoized.
struct DetTable {
    const RankOneDecomposition* w = nullptr;
    std::unordered_map<uint64_t, BigInt> packed;
    std::map<std::vector<int>, BigInt> general;

    const std::vector<BigInt>& vec(int factor, int term) const {
        const auto& t = w->terms[(size_t)term];
        return factor == 0 ? t.a : (factor == 1 ? t.b : t.c);
    }

    BigInt compute(int factor, int len, const std::vector<int>& terms) {
        IntMat m(len, len);
        for (int t = 0; t < len; ++t) {
            const auto& v = vec(factor, terms[(size_t)t]);
            for (int c = 0; c < len; ++c) m.at(t, c) = v[(size_t)c];
        }
        return det_bareiss(m);
    }

    const BigInt& get(int factor, const ColumnInfo& info, const std::vector<int>& terms, bool packable) {
        if (packable) {
            uint64_t key = ((uint64_t)factor << 60) | ((uint64_t)info.len << 56);
            for (int t = 0; t < info.len; ++t) key |= (uint64_t)(terms[(size_t)t] + 1) << (8 * t);
            auto it = packed.find(key);
            if (it != packed.end()) return it->second;
            return packed.emplace(key, compute(factor, info.len, terms)).first->second;
        }
        std::vector<int> key;
        key.reserve(terms.size() + 2);
        key.push_back(factor);
        key.push_back(info.len);
        key.insert(key.end(), terms.begin(), terms.begin() + info.len);
        auto it = general.find(key);
        if (it != general.end()) return it->second;
        return general.emplace(std::move(key), compute(factor, info.len, terms)).first->second;
    }
};

template <typename T>
T narrow(const BigInt& x) {
    if constexpr (std::is_same_v<T, BigInt>)
        return x;
    else
        return (T)x.convert_to<long long>();
}

template <typename T>
struct Worker {
    const Plan& plan;
    const RankOneDecomposition& w;
    DetTable dets;
    std::vector<ColumnState<T>> cols;
    std::array<std::vector<std::vector<T>>, 3> coords;  // [factor][term] full vectors
    BigInt sum = 0;

    Worker(const Plan& p, const RankOneDecomposition& w_) : plan(p), w(w_) {
        dets.w = &w_;
        cols.resize(plan.cols.size());
        for (size_t c = 0; c < cols.size(); ++c) cols[c].reset(plan.cols[c].len);
        for (int i = 0; i < 3; ++i) {
            coords[(size_t)i].resize((size_t)plan.r);
            for (int s = 0; s < plan.r; ++s) {
                const auto& t = w.terms[(size_t)s];
                const std::vector<BigInt>& v = i == 0 ? t.a : (i == 1 ? t.b : t.c);
                auto& dst = coords[(size_t)i][(size_t)s];
                dst.reserve(v.size());
                for (const BigInt& x : v) dst.push_back(narrow<T>(x));
            }
        }
    }

    // Places term s into slot k across the three factors. Returns how many
    // factors succeeded before a dependence stopped it (3 = success); the
    // caller undoes exactly that many.
    int place(int k, int s) {
        for (int i = 0; i < 3; ++i) {
            const SlotRef& ref = plan.refs[(size_t)i][(size_t)k];
            ColumnState<T>& col = cols[(size_t)ref.col];
            const auto& full = coords[(size_t)i][(size_t)s];
            std::vector<T> row(full.begin(), full.begin() + col.len);
            if (!col.try_add(std::move(row), ref.row, s)) return i;
        }
        return 3;
    }

    void unplace(int k, int count) {
        for (int i = count - 1; i >= 0; --i) {
            const SlotRef& ref = plan.refs[(size_t)i][(size_t)k];
            cols[(size_t)ref.col].remove_last(ref.row);
        }
    }

    // Product of determinants of the columns that slot k just completed.
    BigInt completed_factor(int k) {
        BigInt prod = 1;
        for (int i = 0; i < 3; ++i) {
            const SlotRef& ref = plan.refs[(size_t)i][(size_t)k];
            const ColumnState<T>& col = cols[(size_t)ref.col];
            if (col.filled != col.len) continue;
            const BigInt& val = dets.get(plan.cols[(size_t)ref.col].factor, plan.cols[(size_t)ref.col],
                                         col.term_at, plan.packable);
            if (val == 0) throw defect_error("independent rows produced a zero determinant");
            prod *= val;
        }
        return prod;
    }

    void dfs(int k, const BigInt& prod) {
        if (k == plan.d) {
            sum += prod;
            return;
        }
        for (int s = 0; s < plan.r; ++s) {
            int placed = place(k, s);
            if (placed < 3) {
                unplace(k, placed);
                continue;
            }
            dfs(k + 1, prod * completed_factor(k));
            unplace(k, 3);
        }
    }

    // Replays a fixed prefix of term choices, then explores the rest.
    void run_prefix(const std::vector<int>& prefix) {
        BigInt prod = 1;
        std::vector<int> placed_counts;
        bool alive = true;
        for (int s : prefix) {
            int k = (int)placed_counts.size();
            int placed = place(k, s);
            placed_counts.push_back(placed);
            if (placed < 3) {
                alive = false;
                break;
            }
            prod *= completed_factor(k);
        }
        if (alive) dfs((int)prefix.size(), prod);
        for (int j = (int)placed_counts.size() - 1; j >= 0; --j) unplace(j, placed_counts[(size_t)j]);
    }
};

template <typename T>
BigInt evaluate_typed(const Plan& plan, const RankOneDecomposition& w, int threads) {
    // Prefix length balancing task count against replay overhead.
    int P = 0;
    long long tasks = 1;
    while (P < plan.d && tasks < 8LL * threads) {
        tasks *= plan.r;
        ++P;
    }
    if (threads <= 1 || P == 0) {
        Worker<T> worker(plan, w);
        worker.dfs(0, 1);
        return worker.sum;
    }

    std::vector<BigInt> partial((size_t)tasks);
    std::atomic<long long> counter{0};
    auto body = [&]() {
        Worker<T> worker(plan, w);
        std::vector<int> prefix((size_t)P);
        while (true) {
            long long task = counter.fetch_add(1);
            if (task >= tasks) break;
            long long code = task;
            for (int k = P - 1; k >= 0; --k) {
                prefix[(size_t)k] = (int)(code % plan.r);
                code /= plan.r;
            }
            worker.sum = 0;
            worker.run_prefix(prefix);
            partial[(size_t)task] = std::move(worker.sum);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve((size_t)threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    BigInt total = 0;
    for (const BigInt& x : partial) total += x;
    return total;
}

}  // namespace

BigInt evaluate(const WeightTriple& triple, const PermTriple& perms, const RankOneDecomposition& w,
                int threads) {
    Plan plan = build_plan(triple, perms, w);
    if (plan.degenerate) return 0;  // a wedge longer than the space vanishes identically
    if (plan.d == 0) return 1;
    if (plan.r == 0) return 0;

    // The echelon runs in a fixed-width integer when worst-case growth
    // (bordered minors, Hadamard-bounded) provably fits; otherwise it falls
    // back to big integers.
    BigInt max_entry = 0;
    for (const auto& t : w.terms)
        for (const auto* v : {&t.a, &t.b, &t.c})
            for (const BigInt& x : *v)
                if (abs(x) > max_entry) max_entry = abs(x);
    int max_len = 0;
    for (const auto& c : plan.cols) max_len = std::max(max_len, c.len);
    BigInt bound = factorial(std::max(1, max_len));
    for (int i = 0; i < 2 * std::max(1, max_len); ++i) bound *= std::max<BigInt>(max_entry, 2);
    if (bound < (BigInt(1) << 120)) return evaluate_typed<__int128>(plan, w, std::max(1, threads));
    return evaluate_typed<BigInt>(plan, w, std::max(1, threads));
}

std::optional<EvalCertificate> certify_in_S(const WeightTriple& triple, const RankOneDecomposition& w,
                                            long long trials, unsigned long long seed,
                                            const CertifyOptions& opts) {
    int d = triple.degree;
    std::string digest = decomposition_digest(w);
    long long structured = d >= 2 ? 1 + 3LL * (d - 1) : 1;
    for (long long trial = 0; trial < trials; ++trial) {
        PermTriple perms = identity_perm_triple(d);
        if (trial > 0 && trial < structured) {
            int factor = (int)((trial - 1) / (d - 1));
            int shift = 1 + (int)((trial - 1) % (d - 1));
            Perm moved = Perm::cyclic_shift(d, shift);
            if (factor == 0)
                perms.p1 = moved;
            else if (factor == 1)
                perms.p2 = moved;
            else
                perms.p3 = moved;
        } else if (trial >= structured) {
            Rng rng(derive_seed(seed, (unsigned long long)trial));
            perms.p1 = random_perm(rng, d);
            perms.p2 = random_perm(rng, d);
            perms.p3 = random_perm(rng, d);
        }

        // Always try the tensor as given first; the translated evaluation below
        // rescues weights whose unique invariant happens to vanish at this
        // particular basis alignment of w (any g keeps the orbit closure, so a
        // nonzero value at apply_group(g, w) certifies membership just as well).
        std::optional<GroupElement> g;
        BigInt value = evaluate(triple, perms, w, opts.threads);
        if (value == 0 && opts.random_g && trial >= structured) {
            g = random_group_element(w.format, opts.g_bound,
                                     derive_seed(seed, 0x8000000000000000ULL | (unsigned long long)trial));
            value = evaluate(triple, perms, apply_group(*g, w), opts.threads);
            if (value == 0) g.reset();
        }
        if (value != 0) {
            EvalCertificate cert;
            cert.weight = triple;
            cert.perms = perms;
            cert.g = std::move(g);
            cert.value = std::move(value);
            cert.tensor_digest = digest;
            cert.trial = trial;
            cert.seed = seed;
            return cert;
        }
    }
    return std::nullopt;
}

bool hwv_is_nonzero_function(const WeightTriple& triple, const PermTriple& perms,
                             const std::array<int, 3>& format, int trials, unsigned long long seed,
                             int threads) {
    long long cells = 1LL * format[0] * format[1] * format[2];
    int denom = std::max(1, format[0] + format[1] + format[2] - 2);
    int r = (int)(cells / denom) + 2;  // just above the generic rank
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, 0x72616e64ULL + (unsigned long long)trial));
        RankOneDecomposition w;
        w.format = format;
        for (int s = 0; s < r; ++s) {
            RankOneDecomposition::Term t;
            for (int i = 0; i < format[0]; ++i) t.a.emplace_back(rng.between(-3, 3));
            for (int i = 0; i < format[1]; ++i) t.b.emplace_back(rng.between(-3, 3));
            for (int i = 0; i < format[2]; ++i) t.c.emplace_back(rng.between(-3, 3));
            w.terms.push_back(std::move(t));
        }
        if (evaluate(triple, perms, w, threads) != 0) return true;
    }
    return false;
}

}
