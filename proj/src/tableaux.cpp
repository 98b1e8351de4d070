#include "gct/tableaux.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "gct/error.hpp"

namespace gct {

Tableau make_tableau(const Partition& shape, std::vector<std::vector<int>> rows) {
    if (static_cast<int>(rows.size()) != shape.len())
        throw std::invalid_argument("row count does not match shape");
    for (int i = 0; i < shape.len(); ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != shape[i])
            throw std::invalid_argument("row length does not match shape");
        for (int v : rows[static_cast<size_t>(i)])
            if (v < 1) throw std::invalid_argument("tableau entries must be >= 1");
    }
    return Tableau{shape, std::move(rows)};
}

Tableau canonical_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.len()));
    for (int i = 0; i < shape.len(); ++i)
        rows[static_cast<size_t>(i)].assign(static_cast<size_t>(shape[i]), i + 1);
    return Tableau{shape, std::move(rows)};
}

bool is_semistandard(const Tableau& t) {
    for (int i = 0; i < t.shape.len(); ++i)
        for (int j = 0; j < t.shape[i]; ++j) {
            if (j + 1 < t.shape[i] && t.at(i, j) > t.at(i, j + 1)) return false;
            if (i + 1 < t.shape.len() && j < t.shape[i + 1] && t.at(i, j) >= t.at(i + 1, j)) return false;
        }
    return true;
}

std::vector<int> content(const Tableau& t, int m) {
    std::vector<int> alpha(static_cast<size_t>(m), 0);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v < 1 || v > m) throw std::invalid_argument("tableau entry out of range");
            ++alpha[static_cast<size_t>(v - 1)];
        }
    return alpha;
}

Tableau relabel(const Tableau& t, const Perm& sigma) {
    Tableau out = t;
    for (auto& row : out.rows)
        for (int& v : row) v = sigma.apply1(v);
    return out;
}

namespace {

void enum_rec(const Partition& shape, std::vector<int>& remaining, Tableau& acc,
              int row, int col, std::vector<Tableau>& out) {
    if (row == shape.len()) {
        out.push_back(acc);
        return;
    }
    const int next_row = (col + 1 == shape[row]) ? row + 1 : row;
    const int next_col = (col + 1 == shape[row]) ? 0 : col + 1;
    const int lo_left = col > 0 ? acc.at(row, col - 1) : 1;
    const int lo_up = row > 0 ? acc.at(row - 1, col) + 1 : 1;
    const int lo = std::max(lo_left, lo_up);
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
        --remaining[static_cast<size_t>(v - 1)];
        acc.at(row, col) = v;
        enum_rec(shape, remaining, acc, next_row, next_col, out);
        ++remaining[static_cast<size_t>(v - 1)];
    }
}

}

std::vector<Tableau> enumerate_semistandard(const Partition& shape, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
        total += c;
    }
    if (total != shape.size()) throw std::invalid_argument("content size does not match shape");
    std::vector<Tableau> out;
    if (shape.len() == 0) {
        out.push_back(Tableau{shape, {}});
        return out;
    }
    Tableau acc = canonical_tableau(shape);
    std::vector<int> remaining = content;
    enum_rec(shape, remaining, acc, 0, 0, out);
    return out;
}

long long weight_space_dim(const Partition& lambda, const std::vector<int>& alpha) {
    return static_cast<long long>(enumerate_semistandard(lambda, alpha).size());
}

namespace {

using Terms = std::map<Tableau, BigInt>;

std::vector<int> column_of(const Tableau& t, int j, const Partition& colLens) {
    std::vector<int> col(static_cast<size_t>(colLens[j]));
    for (int r = 0; r < colLens[j]; ++r) col[static_cast<size_t>(r)] = t.at(r, j);
    return col;
}

void set_column(Tableau& t, int j, const std::vector<int>& col) {
    for (size_t r = 0; r < col.size(); ++r) t.at(static_cast<int>(r), j) = col[r];
}

// Sorts every column ascending. Returns the sorting sign, or 0 when some
// column has a repeated entry.
int sort_columns(Tableau& t, const Partition& colLens) {
    int sign = 1;
    for (int j = 0; j < colLens.len(); ++j) {
        auto col = column_of(t, j, colLens);
        // insertion sort, counting inversions
        for (size_t i = 1; i < col.size(); ++i) {
            const int v = col[i];
            size_t k = i;
            while (k > 0 && col[k - 1] > v) {
                col[k] = col[k - 1];
                --k;
                sign = -sign;
            }
            col[k] = v;
        }
        for (size_t i = 1; i < col.size(); ++i)
            if (col[i] == col[i - 1]) return 0;
        set_column(t, j, col);
    }
    return sign;
}

// Ordering that strictly increases along straightening steps: compare the
// rightmost differing column at its lowest differing box.
bool tableau_order_less(const Tableau& a, const Tableau& b, const Partition& colLens) {
    for (int j = colLens.len() - 1; j >= 0; --j)
        for (int r = colLens[j] - 1; r >= 0; --r) {
            if (a.at(r, j) == b.at(r, j)) continue;
            return a.at(r, j) < b.at(r, j);
        }
    return false;  // equal
}

void add_scaled(Terms& acc, const Terms& src, int scale) {
    for (const auto& [key, coeff] : src) {
        auto& slot = acc[key];
        slot += scale * coeff;
        if (slot == 0) acc.erase(key);
    }
}

struct StraightenCtx {
    Partition colLens;
    std::map<Tableau, std::shared_ptr<const Terms>>* memo;  // may be null
    int depth_limit = 4096;
};

std::shared_ptr<const Terms> straighten_sorted(const Tableau& t, StraightenCtx& ctx, int depth);

// Dispatch on an arbitrary filling: sort columns, then recurse on the sorted
// tableau. Returns {sign, sorted-expansion}; zero sign means a repeated column
// entry killed the term.
Terms straighten_any(Tableau t, StraightenCtx& ctx, int depth) {
    if (depth > ctx.depth_limit)
        throw defect_error("straighten recursion depth guard tripped");
    const int sign = sort_columns(t, ctx.colLens);
    Terms out;
    if (sign == 0) return out;
    const auto sorted = straighten_sorted(t, ctx, depth);
    add_scaled(out, *sorted, sign);
    return out;
}

std::shared_ptr<const Terms> straighten_sorted(const Tableau& t, StraightenCtx& ctx, int depth) {
    if (ctx.memo)
        if (const auto it = ctx.memo->find(t); it != ctx.memo->end()) return it->second;

    // locate the violation: leftmost column pair, topmost row
    int vj = -1, vk = -1;
    for (int j = 0; j + 1 < ctx.colLens.len() && vj < 0; ++j)
        for (int r = 0; r < ctx.colLens[j + 1]; ++r)
            if (t.at(r, j) > t.at(r, j + 1)) {
                vj = j;
                vk = r;
                break;
            }

    auto result = std::make_shared<Terms>();
    if (vj < 0) {
        (*result)[t] = 1;
    } else {
        // exchange the top (vk+1) entries of column vj+1 with every selection of
        // that many entries of column vj, preserving vertical order
        const int take = vk + 1;
        const auto left = column_of(t, vj, ctx.colLens);
        const auto right = column_of(t, vj + 1, ctx.colLens);
        const int p = static_cast<int>(left.size());
        std::vector<int> sel(static_cast<size_t>(take));
        for (int i = 0; i < take; ++i) sel[static_cast<size_t>(i)] = i;
        while (true) {
            Tableau s = t;
            auto newLeft = left;
            auto newRight = right;
            for (int i = 0; i < take; ++i) {
                newLeft[static_cast<size_t>(sel[static_cast<size_t>(i)])] = right[static_cast<size_t>(i)];
                newRight[static_cast<size_t>(i)] = left[static_cast<size_t>(sel[static_cast<size_t>(i)])];
            }
            set_column(s, vj, newLeft);
            set_column(s, vj + 1, newRight);
            {
                // termination order: every exchange output lies strictly above t
                Tableau probe = s;
                if (sort_columns(probe, ctx.colLens) != 0 &&
                    !tableau_order_less(t, probe, ctx.colLens))
                    throw defect_error("straighten monotonicity violated");
            }
            add_scaled(*result, straighten_any(std::move(s), ctx, depth + 1), 1);
            // next combination
            int i = take - 1;
            while (i >= 0 && sel[static_cast<size_t>(i)] == p - take + i) --i;
            if (i < 0) break;
            ++sel[static_cast<size_t>(i)];
            for (int k = i + 1; k < take; ++k)
                sel[static_cast<size_t>(k)] = sel[static_cast<size_t>(k - 1)] + 1;
        }
    }
    if (ctx.memo) ctx.memo->emplace(t, result);
    return result;
}

StraightExpansion straighten_impl(const Tableau& t, bool cached) {
    thread_local std::map<Tableau, std::shared_ptr<const Terms>> memo_store;
    StraightenCtx ctx;
    ctx.colLens = transpose(t.shape);
    ctx.memo = cached ? &memo_store : nullptr;
    StraightExpansion out;
    out.terms = straighten_any(t, ctx, 0);
    return out;
}

}

StraightExpansion straighten(const Tableau& t) { return straighten_impl(t, true); }
StraightExpansion straighten_uncached(const Tableau& t) { return straighten_impl(t, false); }

IntMat perm_action_matrix(const Perm& sigma, const Partition& lambda, const std::vector<int>& alpha) {
    const int m = static_cast<int>(alpha.size());
    if (sigma.degree() != m) throw std::invalid_argument("permutation degree must match slot count");
    for (int i = 0; i < m; ++i)
        if (alpha[static_cast<size_t>(sigma.apply(i))] != alpha[static_cast<size_t>(i)])
            throw std::invalid_argument("permutation does not stabilize the content");

    const auto basis = enumerate_semistandard(lambda, alpha);
    std::map<Tableau, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    IntMat mat(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t col = 0; col < basis.size(); ++col) {
        const auto exp = straighten(relabel(basis[col], sigma));
        for (const auto& [s, c] : exp.terms) {
            const auto it = index.find(s);
            if (it == index.end()) throw defect_error("straightening left the weight space");
            mat.at(it->second, static_cast<int>(col)) = c;
        }
    }
    return mat;
}

std::string format_tableau_rows(const Tableau& t) {
    std::string out;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (i) out += ';';
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(t.rows[i][j]);
        }
    }
    return out;
}

std::vector<std::vector<int>> parse_tableau_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string rowText;
    while (std::getline(ss, rowText, ';')) {
        std::vector<int> row;
        std::stringstream rs(rowText);
        std::string item;
        while (std::getline(rs, item, ',')) {
            while (!item.empty() && item.front() == ' ') item.erase(item.begin());
            while (!item.empty() && item.back() == ' ') item.pop_back();
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad tableau entry: '" + item + "'");
            row.push_back(std::stoi(item));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}
