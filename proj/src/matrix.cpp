#include "gct/matrix.hpp"

#include <utility>

namespace gct {

BigInt det_bareiss(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;  // exact per Bareiss
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

int rank_int(IntMat m) {
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j) {
                BigInt v = m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j);
                m.at(i, j) = v / prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(piv, c));
        const Rational inv = m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<std::vector<Rational>> solve_linear(RatMat a, std::vector<Rational> b) {
    if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("solve_linear shape mismatch");
    RatMat aug(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[static_cast<size_t>(r)];
    }
    const std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;  // 0 = 1 row
    std::vector<Rational> x(static_cast<size_t>(a.cols), Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<size_t>(pivots[i])] = aug.at(static_cast<int>(i), a.cols);
    return x;
}

}
