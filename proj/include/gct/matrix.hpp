#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gct/bigint.hpp"

namespace gct {

// Minimal dense exact matrix. Row-major. Only the operations the oracles and
// the rational LP need; this is not a linear-algebra library.
template <typename T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    T& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

using IntMat = Mat<BigInt>;
using RatMat = Mat<Rational>;

template <typename T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape mismatch");
    Mat<T> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

template <typename T>
Mat<T> kron_product(const Mat<T>& x, const Mat<T>& y) {
    Mat<T> z(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            const T& v = x.at(i, j);
            if (v == 0) continue;
            for (int p = 0; p < y.rows; ++p)
                for (int q = 0; q < y.cols; ++q)
                    z.at(i * y.rows + p, j * y.cols + q) = v * y.at(p, q);
        }
    return z;
}

template <typename T>
BigInt mat_trace(const Mat<T>& x) {
    BigInt t = 0;
    for (int i = 0; i < x.rows && i < x.cols; ++i) t += x.at(i, i);
    return t;
}

// Fraction-free (Bareiss) determinant; n x n.
BigInt det_bareiss(IntMat m);

// Rank over the rationals of an integer matrix, by fraction-free elimination.
int rank_int(IntMat m);

// In-place reduced row echelon form over the rationals; returns pivot columns.
std::vector<int> rref(RatMat& m);

// One exact solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(RatMat a, std::vector<Rational> b);

}
