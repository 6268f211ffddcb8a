#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "vecap/errors.hpp"

namespace vecap {

// Dense row-major double matrix. Small and value-semantic; everything in the
// loss and eval modules works on these.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double & at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * cols, cols};
    }

    bool operator==(const Matrix &) const = default;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline double l2_norm(std::span<const double> v) {
    return std::sqrt(dot(v, v));
}

// Scales every row to unit L2 norm. Throws on a (near-)zero row.
inline void normalize_rows(Matrix & m, double min_norm = 1e-12) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        auto r = m.row(i);
        const double n = l2_norm(r);
        if (n < min_norm) {
            throw Error("normalize_rows: row " + std::to_string(i) + " has near-zero norm");
        }
        for (double & x : r) {
            x /= n;
        }
    }
}

// A * B^T where A is n x d and B is m x d; result n x m.
inline Matrix matmul_nt(const Matrix & a, const Matrix & b) {
    if (a.cols != b.cols) {
        throw DimMismatch("matmul_nt: inner dims " + std::to_string(a.cols) + " vs " +
                          std::to_string(b.cols));
    }
    Matrix out(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < b.rows; ++j) {
            out.at(i, j) = dot(a.row(i), b.row(j));
        }
    }
    return out;
}

// A (n x p) * B (p x d) -> n x d.
inline Matrix matmul(const Matrix & a, const Matrix & b) {
    if (a.cols != b.rows) {
        throw DimMismatch("matmul: inner dims " + std::to_string(a.cols) + " vs " +
                          std::to_string(b.rows));
    }
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

inline Matrix slice_rows(const Matrix & m, std::size_t from, std::size_t to) {
    if (from > to || to > m.rows) {
        throw Error("slice_rows: bad range");
    }
    Matrix out(to - from, m.cols);
    std::copy(m.data.begin() + static_cast<std::ptrdiff_t>(from * m.cols),
              m.data.begin() + static_cast<std::ptrdiff_t>(to * m.cols), out.data.begin());
    return out;
}

}  // namespace vecap
