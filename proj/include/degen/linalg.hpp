#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "degen/scalar.hpp"

namespace degen::linalg {

inline bool entry_is_zero(const mpq_class& x) { return x == 0; }
inline bool entry_is_zero(const Scalar& x) { return x.is_zero(); }

/// Dense matrix as rows of field entries (mpq_class or Scalar).
template <class F>
using Matrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form.  Pivot choice is "first nonzero in
/// column order", so the result is deterministic.  Returns the rank.
template <class F>
std::size_t rref(Matrix<F>& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && entry_is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const F lead = m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] / lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || entry_is_zero(m[i][col])) continue;
            const F factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m);
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column, in
/// column order.  The basis vector for free column j has a 1 in slot j.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m, std::size_t cols) {
    const std::size_t rk = rref(m);
    std::vector<std::size_t> pivot_col(rk);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0, col = 0; r < rk; ++r) {
        while (entry_is_zero(m[r][col])) ++col;
        pivot_col[r] = col;
        is_pivot[col] = true;
    }
    Matrix<F> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<F> v(cols, F(0));
        v[j] = F(1);
        for (std::size_t r = 0; r < rk; ++r) v[pivot_col[r]] = -m[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace degen::linalg
